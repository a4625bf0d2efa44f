class UnionFind:
    """Disjoint sets over hashable keys, with path halving."""

    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx
        return rx

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


class ParityUnionFind:
    """Union-find that also tracks a Z/2 label relative to the root.

    ``union(x, y, parity)`` records ``label(x) + label(y) == parity`` and
    returns False when that contradicts earlier constraints.
    """

    def __init__(self):
        self.parent = {}
        self.parity = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0

    def find(self, x):
        self.add(x)
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # recompress from the top so each node stores parity to root
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root

    def label(self, x):
        root = self.find(x)
        return 0 if x == root else self.parity[x]

    def union(self, x, y, parity):
        rx, ry = self.find(x), self.find(y)
        px, py = self.label(x), self.label(y)
        if rx == ry:
            return (px ^ py) == parity
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ parity
        return True
