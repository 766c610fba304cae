"""Brute-force reference implementations used by tests and verify modes.

Everything here favors obviousness over speed: suffixes are compared as plain
character sequences, the reference suffix tree is built by recursive grouping
of the sorted suffixes, and range minima / lca are linear scans and parent
walks.  A size guard keeps the quadratic oracles from being used at scale by
accident.
"""

from __future__ import annotations

from .text_store import SENTINEL, StringView

ORACLE_BOUND = 5000


class OracleBoundExceeded(Exception):
    pass


def _guard(n: int, bound: int) -> None:
    if n > bound:
        raise OracleBoundExceeded(f"oracle input of size {n} exceeds bound {bound}")


def naive_lcp(a: StringView, b: StringView) -> int:
    """Character-scan lcp of two views (endmarkers compare as code 0)."""
    lcp = 0
    limit = min(a.length, b.length)
    while lcp < limit and a.symbol_at(lcp + 1) == b.symbol_at(lcp + 1):
        lcp += 1
    return lcp


def naive_lcp_codes(a, b) -> int:
    """lcp of two plain code sequences (no endmarker convention)."""
    lcp = 0
    limit = min(len(a), len(b))
    while lcp < limit and a[lcp] == b[lcp]:
        lcp += 1
    return lcp


class RefNode:
    """Node of the reference suffix tree; labels are explicit code tuples."""

    __slots__ = ("label", "children", "suffix_len", "path_len")

    def __init__(self, label=(), path_len=0):
        self.label = tuple(label)
        self.children: list[RefNode] = []  # sorted by first label symbol
        self.suffix_len = None             # set on leaves
        self.path_len = path_len

    def is_leaf(self) -> bool:
        return not self.children


def _terminated(text_codes) -> list[int]:
    codes = list(text_codes)
    if any(c < 1 for c in codes):
        raise ValueError("text codes must be user symbols (>= 1)")
    codes.append(SENTINEL)
    return codes


def naive_suffix_array(text_codes, bound: int = ORACLE_BOUND):
    """Sorted suffix start positions and the adjacent-lcp array.

    Positions are 0-based over the terminated text (the sentinel suffix is
    position len(text_codes)).  LCP[i] is the lcp of suffixes SA[i], SA[i+1],
    counted over the terminated text so equal-through-endmarker never occurs.
    """
    codes = _terminated(text_codes)
    n = len(codes)
    _guard(n, bound)
    s = "".join(map(chr, codes))
    sa = sorted(range(n), key=lambda i: s[i:])
    lcp = [naive_lcp_codes(codes[sa[i]:], codes[sa[i + 1]:]) for i in range(n - 1)]
    return sa, lcp


def naive_suffix_array_slow(text_codes, bound: int = ORACLE_BOUND):
    """Independent cross-check: insertion order by pairwise character compare."""
    codes = _terminated(text_codes)
    n = len(codes)
    _guard(n, bound)

    def less(i, j):
        while True:
            ci, cj = codes[i], codes[j]
            if ci != cj:
                return ci < cj
            i += 1
            j += 1

    order: list[int] = []
    for i in range(n):
        lo, hi = 0, len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            if less(order[mid], i):
                lo = mid + 1
            else:
                hi = mid
        order.insert(lo, i)
    return order


def _build_ref(codes, starts, path_len) -> RefNode:
    node = RefNode(path_len=path_len)
    n = len(codes)
    i = 0
    while i < len(starts):
        first = codes[starts[i] + path_len] if starts[i] + path_len < n else None
        j = i
        while j < len(starts) and codes[starts[j] + path_len] == first:
            j += 1
        group = starts[i:j]
        # longest common extension of the whole group
        ext = 1
        while True:
            p = group[0] + path_len + ext
            if p >= n:
                break
            sym = codes[p]
            if all(g + path_len + ext < n and codes[g + path_len + ext] == sym for g in group):
                ext += 1
            else:
                break
        child_path = path_len + ext
        child = _build_ref(codes, [g for g in group if g + child_path < n], child_path) \
            if len(group) > 1 else RefNode(path_len=child_path)
        child.label = tuple(codes[group[0] + path_len: group[0] + child_path])
        child.path_len = child_path
        if len(group) == 1:
            child.suffix_len = n - group[0]
        elif any(g + child_path == n for g in group):
            raise AssertionError("endmarker makes no suffix a proper prefix of another")
        node.children.append(child)
        i = j
    return node


def naive_suffix_structures(text_codes, bound: int = ORACLE_BOUND):
    """(SA, LCP, reference suffix tree) of the terminated text."""
    sa, lcp = naive_suffix_array(text_codes, bound)
    codes = _terminated(text_codes)
    root = _build_ref(codes, sa, 0)
    return sa, lcp, root


def naive_search(text_codes, pattern_codes) -> list[int]:
    """All 0-based occurrence positions of the pattern in the text."""
    text = list(text_codes)
    pat = list(pattern_codes)
    m = len(pat)
    if m == 0:
        return list(range(len(text) + 1))
    return [i for i in range(len(text) - m + 1) if text[i:i + m] == pat]


def naive_rmq(values, i: int, j: int):
    """(min, leftmost argmin) over values[i..j] inclusive, 0-based."""
    best = values[i]
    arg = i
    for k in range(i + 1, j + 1):
        if values[k] < best:
            best = values[k]
            arg = k
    return best, arg


def naive_lca(u, v):
    """Parent-walk lca for nodes exposing .parent and .depth."""
    while u.depth > v.depth:
        u = u.parent
    while v.depth > u.depth:
        v = v.parent
    while u is not v:
        u = u.parent
        v = v.parent
    return u


def ref_trees_equal(a: RefNode, b: RefNode) -> bool:
    """Structural equality of two reference trees (labels, order, leaves)."""
    if a.label != b.label or a.suffix_len != b.suffix_len:
        return False
    if len(a.children) != len(b.children):
        return False
    return all(ref_trees_equal(x, y) for x, y in zip(a.children, b.children))


def trees_isomorphic(ref_root: RefNode, sfx_tree) -> bool:
    """Compare the reference tree against a live suffix tree's exported shape."""
    return ref_trees_equal(ref_root, sfx_tree.export_shape())
