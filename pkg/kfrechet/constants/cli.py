EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
