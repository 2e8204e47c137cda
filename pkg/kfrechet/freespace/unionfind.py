class DisjointSet:
    """Union-find over integer keys with path halving.

    The smaller key always becomes the root, so a class is named by its smallest
    member.
    """

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def makeset(self, key: int) -> None:
        self.parent.setdefault(key, key)

    def find(self, key: int) -> int:
        parent = self.parent
        while parent[key] != key:
            parent[key] = parent[parent[key]]
            key = parent[key]
        return key

    def union(self, a: int, b: int) -> None:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return
        if root_a < root_b:
            self.parent[root_b] = root_a
        else:
            self.parent[root_a] = root_b

    def classes(self) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for key in self.parent:
            groups.setdefault(self.find(key), []).append(key)
        return groups
