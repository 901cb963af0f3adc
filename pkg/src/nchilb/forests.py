"""m-ary forests: enumeration, orderings, critical pairs and index bijections.

A tree is a finite prefix-closed set of words over the alphabet {1,..,m};
a forest is an ordered n-tuple of trees.  Words, trees and forests carry
total orders (words lexicographically with prefixes first; among trees the
larger tree is the smaller one, ties broken at the first differing sorted
word; forests componentwise at the first differing tree).  Each forest
determines its set of critical pairs, the index j of every critical pair,
the cell-dimension statistic d(S) and its codimension, and the tuples that
realize the forest-to-J-tuple-to-B-tuple bijections.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "Word",
    "Tree",
    "Forest",
    "CriticalPair",
    "word_from_string",
    "word_to_string",
    "compare_words",
    "compare_forests",
    "enumerate_trees",
    "enumerate_forests",
    "critical_pairs",
    "j_index",
    "d_value",
    "codim",
    "ambient_dimension",
    "poincare_polynomial",
    "forest_to_jtuple",
    "jtuple_to_forest",
    "jtuple_to_btuple",
    "btuple_to_jtuple",
    "is_valid_jtuple",
    "is_valid_btuple",
    "enumerate_jtuples",
    "enumerate_btuples",
    "forest_to_json",
    "forest_from_json",
]

# A word is a tuple of letters from {1,..,m}; () is the empty word.
Word = tuple


def word_from_string(s):
    return tuple(int(ch) for ch in s)


def word_to_string(w):
    return "".join(str(letter) for letter in w)


def compare_words(w1, w2):
    """-1, 0 or 1; prefixes come first, otherwise the first differing letter decides."""
    p = 0
    while p < len(w1) and p < len(w2) and w1[p] == w2[p]:
        p += 1
    if p == len(w1) and p == len(w2):
        return 0
    if p == len(w1):
        return -1
    if p == len(w2):
        return 1
    return -1 if w1[p] < w2[p] else 1


@dataclass(frozen=True)
class Tree:
    """A prefix-closed word set, stored sorted in word order."""

    words: tuple

    def __post_init__(self):
        stored = tuple(sorted((tuple(w) for w in self.words)))
        object.__setattr__(self, "words", stored)
        present = set(stored)
        for w in stored:
            if any(letter < 1 for letter in w):
                raise ValueError(f"word {w} contains letters below 1")
            if w and w[:-1] not in present:
                raise ValueError(f"word set is not prefix-closed at {w}")

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return tuple(word) in set(self.words)

    def sort_key(self):
        # larger trees are smaller; ties by the sorted word list
        return (-len(self.words), self.words)


@dataclass(frozen=True)
class Forest:
    """An ordered n-tuple of m-ary trees with d nodes in total."""

    trees: tuple
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("alphabet size m must be non-negative")
        if self.n < 1:
            raise ValueError("root count n must be positive")
        trees = tuple(t if isinstance(t, Tree) else Tree(tuple(t)) for t in self.trees)
        if len(trees) != self.n:
            raise ValueError(f"expected {self.n} trees, got {len(trees)}")
        for t in trees:
            for w in t.words:
                if any(letter > self.m for letter in w):
                    raise ValueError(f"word {w} uses letters above m={self.m}")
        object.__setattr__(self, "trees", trees)

    @property
    def d(self):
        return sum(len(t) for t in self.trees)

    def sort_key(self):
        return tuple(t.sort_key() for t in self.trees)

    def pairs(self):
        """All (root index, word) pairs of the forest, in increasing pair order."""
        return [
            (k, w) for k, tree in enumerate(self.trees, start=1) for w in tree.words
        ]


class CriticalPair(NamedTuple):
    root: int
    word: tuple


def compare_forests(f1, f2):
    """-1, 0 or 1 under the forest order (same m and n required)."""
    if (f1.m, f1.n) != (f2.m, f2.n):
        raise ValueError("forests must share m and n")
    k1, k2 = f1.sort_key(), f2.sort_key()
    return -1 if k1 < k2 else (0 if k1 == k2 else 1)


@lru_cache(maxsize=None)
def enumerate_trees(m, size):
    """All m-ary trees with `size` nodes, as sorted word tuples."""
    if size == 0:
        return ((),)
    shapes = []
    for split in _compositions(size - 1, m):
        children = [enumerate_trees(m, s) for s in split]
        for combo in itertools.product(*children):
            words = [()]
            for letter, subtree in enumerate(combo, start=1):
                words.extend((letter,) + w for w in subtree)
            shapes.append(tuple(sorted(words)))
    return tuple(sorted(set(shapes)))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_forests(m, d, n):
    """All m-ary forests with n roots and d nodes, sorted increasingly."""
    if m < 0 or d < 0 or n < 1:
        raise ValueError("need m >= 0, d >= 0, n >= 1")
    forests = []
    for split in _compositions(d, n):
        pools = [enumerate_trees(m, s) for s in split]
        for combo in itertools.product(*pools):
            forests.append(Forest(tuple(Tree(t) for t in combo), m, n))
    forests.sort(key=Forest.sort_key)
    return forests


def critical_pairs(forest):
    """The critical pairs of the forest, sorted by root index then word order.

    A pair (k, w) is critical when tree k is empty and w is the empty word,
    or when w extends a stored word of tree k by one letter without being
    stored itself.  There are exactly (m-1)d + n of them.
    """
    m = forest.m
    result = []
    for k, tree in enumerate(forest.trees, start=1):
        if len(tree) == 0:
            result.append(CriticalPair(k, ()))
            continue
        stored = set(tree.words)
        for w in tree.words:
            for letter in range(1, m + 1):
                child = w + (letter,)
                if child not in stored:
                    result.append(CriticalPair(k, child))
    result.sort(key=lambda pair: (pair.root, pair.word))
    return result


def j_index(forest, pair):
    """Number of forest elements strictly below the critical pair in pair order."""
    pair = CriticalPair(*pair)
    if pair not in critical_pairs(forest):
        raise ValueError(f"{pair} is not critical for the forest")
    count = 0
    for k, tree in enumerate(forest.trees, start=1):
        if k < pair.root:
            count += len(tree)
        elif k == pair.root:
            count += sum(1 for w in tree.words if w < pair.word)
    return count


def d_value(forest):
    """Cell dimension: the sum of j over all critical pairs."""
    return sum(j_index(forest, pair) for pair in critical_pairs(forest))


def ambient_dimension(m, d, n):
    """Dimension (m-1)d^2 + nd of the ambient variety."""
    return (m - 1) * d * d + n * d


def codim(forest):
    """Cell codimension: ambient dimension minus d_value."""
    return ambient_dimension(forest.m, forest.d, forest.n) - d_value(forest)


def poincare_polynomial(m, d, n, by="dim"):
    """Coefficient list of sum_S t^{d_value(S)} (by="dim") or t^{codim(S)} (by="codim").

    Entry i is the number of forests with statistic i; the list is empty
    only when there are no forests at all.
    """
    if by not in ("dim", "codim"):
        raise ValueError("by must be 'dim' or 'codim'")
    stat = d_value if by == "dim" else codim
    values = [stat(forest) for forest in enumerate_forests(m, d, n)]
    if not values:
        return []
    coeffs = [0] * (max(values) + 1)
    for v in values:
        coeffs[v] += 1
    return coeffs


# ---------------------------------------------------------------------------
# the bijections forests -> J-tuples -> B-tuples


def forest_to_jtuple(forest):
    """The weakly increasing tuple of j-indices over the sorted critical pairs."""
    return tuple(sorted(j_index(forest, pair) for pair in critical_pairs(forest)))


def _required_j_floor(nu, m, d, n):
    # smallest value allowed at 1-based position nu of a J-tuple
    floor = 0
    for level in range(1, d + 1):
        if (m - 1) * (level - 1) + n <= nu:
            floor = max(floor, level)
    return floor


def is_valid_jtuple(values, m, d, n):
    values = tuple(values)
    if len(values) != (m - 1) * d + n:
        return False
    if any(not 0 <= v <= d for v in values):
        return False
    if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
        return False
    return all(
        v >= _required_j_floor(nu, m, d, n) for nu, v in enumerate(values, start=1)
    )


def enumerate_jtuples(m, d, n):
    """All members of the J-tuple set, in lexicographic order."""
    length = (m - 1) * d + n
    if length < 0:
        return []
    floors = [_required_j_floor(nu, m, d, n) for nu in range(1, length + 1)]
    out = []

    def gen(prefix):
        pos = len(prefix)
        if pos == length:
            out.append(tuple(prefix))
            return
        low = max(floors[pos], prefix[-1] if prefix else 0)
        for v in range(low, d + 1):
            gen(prefix + [v])

    gen([])
    return out


def jtuple_to_btuple(values, d):
    """b_i counts the entries equal to i, for i = 0..d-1."""
    values = tuple(values)
    if any(not 0 <= v <= d for v in values):
        raise ValueError("J-tuple entries must lie in 0..d")
    return tuple(sum(1 for v in values if v == i) for i in range(d))


def btuple_to_jtuple(b, m, d, n):
    """Sorted tuple with b_i copies of i and the rest filled with d."""
    b = tuple(b)
    length = (m - 1) * d + n
    fill = length - sum(b)
    if fill < 0:
        raise ValueError("B-tuple has too many entries for the J-tuple length")
    values = []
    for i, count in enumerate(b):
        values.extend([i] * count)
    values.extend([d] * fill)
    return tuple(values)


def is_valid_btuple(b, m, d, n):
    b = tuple(b)
    if len(b) != d or any(v < 0 for v in b):
        return False
    partial = 0
    for i, v in enumerate(b):
        partial += v
        if partial >= (m - 1) * i + n:
            return False
    return True


def enumerate_btuples(m, d, n):
    """All members of the B-tuple set, in lexicographic order."""
    out = []

    def gen(prefix, partial):
        i = len(prefix)
        if i == d:
            out.append(tuple(prefix))
            return
        bound = (m - 1) * i + n - partial  # strict upper bound on b_i + past sum
        for v in range(max(bound, 0)):
            gen(prefix + [v], partial + v)

    gen([], 0)
    return out


def jtuple_to_forest(values, m, d, n):
    """Reconstruct the unique forest whose J-tuple is the given one.

    In the merged pair order on forest elements and critical pairs, the
    nu-th critical pair sits right after j_nu elements, so the tuple fixes
    the element/critical flag sequence; parsing that sequence as n preorder
    traversals (an element owns m child slots, a critical pair is a leaf)
    rebuilds the word sets.
    """
    values = tuple(values)
    if not is_valid_jtuple(values, m, d, n):
        raise ValueError(f"{values} is not a valid J-tuple for (m,d,n)=({m},{d},{n})")
    length = len(values)
    merged = d + length
    is_critical = [False] * merged
    for nu, j in enumerate(values):
        is_critical[j + nu] = True

    pos = 0

    def parse(prefix, words):
        nonlocal pos
        if pos >= merged:
            raise ValueError("J-tuple does not parse to a forest")
        critical = is_critical[pos]
        pos += 1
        if critical:
            return
        words.append(prefix)
        for letter in range(1, m + 1):
            parse(prefix + (letter,), words)

    trees = []
    for _ in range(n):
        words = []
        parse((), words)
        trees.append(Tree(tuple(words)))
    if pos != merged:
        raise ValueError("J-tuple does not parse to a forest")
    forest = Forest(tuple(trees), m, n)
    if forest.d != d:
        raise ValueError("J-tuple does not parse to a forest with d nodes")
    return forest


# ---------------------------------------------------------------------------
# JSON encoding


def forest_to_json(forest):
    """Forest as an array of arrays of digit strings; the empty word is ""."""
    return [[word_to_string(w) for w in tree.words] for tree in forest.trees]


def forest_from_json(data, m):
    trees = tuple(Tree(tuple(word_from_string(s) for s in words)) for words in data)
    return Forest(trees, m, len(trees))
