"""Associativity coherence at the arithmetic shadow level.

Bracketings of a single generator P are full binary trees; the directed
associator move (A x B) x C -> A x (B x C) is a rightward rotation at any
internal node.  Because every edge of a bracketing diagram contributes one
factor of a single scalar C after collapse, two parallel directed paths of
lengths a and b force C^a = C^b; with C invertible the relation set yields
C^d = id for d = gcd |a - b|.  For four strands the two pentagon boundary
paths have lengths 2 and 3, giving C = id directly.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, FrozenSet, List, Set, Tuple

# A tree is either the leaf "P" or a pair (left, right).
LEAF = "P"

MAX_STRANDS = 7


def leaf_count(tree) -> int:
    if tree == LEAF:
        return 1
    return leaf_count(tree[0]) + leaf_count(tree[1])


def enumerate_brackets(n: int) -> List[tuple]:
    """All full binary trees with n leaves, in deterministic order;
    len(result) = Catalan(n - 1)."""
    if not 2 <= n <= MAX_STRANDS:
        raise ValueError(f"leaf count must be in [2, {MAX_STRANDS}]")
    return _brackets(n)


def _brackets(n: int) -> List[tuple]:
    if n == 1:
        return [LEAF]
    out = []
    for k in range(1, n):
        for left in _brackets(k):
            for right in _brackets(n - k):
                out.append((left, right))
    return out


def left_comb(n: int) -> tuple:
    tree = LEAF
    for _ in range(n - 1):
        tree = (tree, LEAF)
    return tree


def right_comb(n: int) -> tuple:
    tree = LEAF
    for _ in range(n - 1):
        tree = (LEAF, tree)
    return tree


def tamari_successors(tree) -> List[Tuple[tuple, tuple]]:
    """All (tree', position) reachable by one rightward rotation
    (A x B) x C -> A x (B x C); position is the root-to-node path of 0/1
    branch choices."""
    out = []
    if tree == LEAF:
        return out
    left, right = tree
    if left != LEAF:
        a, b = left
        out.append(((a, (b, right)), ()))
    for sub, pos in tamari_successors(left):
        out.append(((sub, right), (0,) + pos))
    for sub, pos in tamari_successors(right):
        out.append(((left, sub), (1,) + pos))
    return out


def is_rotation(src, dst) -> bool:
    """Structural validation that dst is one rightward rotation of src."""
    return any(t == dst for t, _ in tamari_successors(src))


def path_lengths(n: int) -> List[int]:
    """Sorted distinct lengths of directed rotation paths from the left comb
    to the right comb on n leaves."""
    if not 3 <= n <= MAX_STRANDS:
        raise ValueError(f"strand count must be in [3, {MAX_STRANDS}]")
    target = right_comb(n)
    memo: Dict[tuple, FrozenSet[int]] = {}

    def lengths_from(tree) -> FrozenSet[int]:
        if tree == target:
            return frozenset([0])
        got = memo.get(tree)
        if got is not None:
            return got
        acc: Set[int] = set()
        for succ, _ in tamari_successors(tree):
            acc.update(k + 1 for k in lengths_from(succ))
        out = frozenset(acc)
        memo[tree] = out
        return out

    return sorted(lengths_from(left_comb(n)))


def parallel_relations(n: int) -> Set[Tuple[int, int]]:
    """All unordered pairs (a, b), a < b, of distinct comb-to-comb path
    lengths; each pair is a relation C^a = C^b."""
    lens = path_lengths(n)
    return {(a, b) for i, a in enumerate(lens) for b in lens[i + 1:]}


def conclude_idempotent(relations: Set[Tuple[int, int]],
                        invertible: bool) -> str:
    """Cancel C^a = C^b relations: with C invertible, each pair gives
    C^{|a-b|} = id, so the verdict is C^d = id for d the gcd of the
    differences, reading 'C=id' when d = 1."""
    if not relations or not invertible:
        return "inconclusive"
    d = 0
    for a, b in relations:
        d = math.gcd(d, abs(a - b))
    if d == 1:
        return "C=id"
    return f"C^{d}=id"


@lru_cache(maxsize=None)
def coherence_report(n: int) -> dict:
    lens = path_lengths(n)
    relations = sorted(parallel_relations(n))
    return {
        "n": n,
        "catalan": len(enumerate_brackets(n)),
        "path_lengths": lens,
        "relations": [list(r) for r in relations],
        "verdict": conclude_idempotent(set(relations), invertible=True),
    }
