# Bottom-left corner of the bounding rectangle B.
BOX_ORIGIN = (1.0, 1.0)
BOX_HEIGHT = 1.0
MAX_CLAUSE_WIDTH = 3
