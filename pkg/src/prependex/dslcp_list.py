"""Sorted-string list with O(1) order, neighbor and lcp (range-minimum) queries.

Strings are represented by opaque handles kept in lexicographic order by the
caller; between every adjacent pair lives one entry holding their lcp plus an
opaque witness payload.  An lcp query between two handles is the minimum entry
value on the open interval between them, so the structure is a dynamic
range-minimum index restricted to *monotone* updates: an insert replaces one
entry by two whose minimum equals it, a removal replaces two adjacent entries
by their minimum.  That restriction is what makes constant-time maintenance
possible at all.

Layout is two-level.  Entries live in buckets of O(log^2 N) entries; each
bucket is a shallow micro tree whose nodes hold at most ``c`` entries plus a
succinct Cartesian-tree topology code (bit-packed balanced parentheses) used
for in-node range minima via a shared lookup table.  Each bucket contributes
its two boundary positions as leaves of the main tree: a weight-balanced tree
with branching parameter ``b`` whose internal nodes carry doubly linked copy
lists of their descendant leaves' values augmented with per-position prefix
and suffix minima, and whose leaves carry bit-packed sibling-rank pathstrings,
ancestor arrays and clone pointers so that leaf lca (and hence any cross-bucket
range minimum) is answered by one exclusive-or plus table work.

Two conceptual -infinity sentinel entries bound the entry sequence so that
boundary inserts are monotone replacements like any other.  Node splits and
the periodic largest-bucket split are performed eagerly; their work is counted
separately (``rebuild_steps``) from steady-state work (``steady_steps``).
"""

from __future__ import annotations

LESS, EQUAL, GREATER = -1, 0, 1

NEG_INF = -1  # below every real lcp value (lcps are >= 0)

_MIN_CAPACITY = 64


class MonotonicityViolation(Exception):
    """Interior insert whose lcp pair does not preserve the replaced entry."""


class AdjacencyViolation(Exception):
    """Insert anchored at handles that are not neighbors."""


class InvalidHandleError(Exception):
    """Operation on a handle that was never issued or was already removed."""


# ---------------------------------------------------------------------------
# Succinct Cartesian-tree codes
#
# A node's topology code is the push/pop (balanced parentheses) sequence of
# the left-to-right Cartesian-tree build over its values, at most 2 bits per
# value.  Range minima need only the topology: the answer position for [i..j]
# is the minimum-depth position in that range, tabulated once per (size, code).
# ---------------------------------------------------------------------------

_ARGMIN_TABLES: dict = {}
_CODE_CACHE: dict = {}
_CODE_CACHE_LIMIT = 1 << 18


def cartesian_code(values) -> int:
    """Topology code of the Cartesian tree of ``values`` (leftmost min wins)."""
    code = 0
    stack = []
    for v in values:
        while stack and stack[-1] > v:
            stack.pop()
            code <<= 1  # pop bit 0
        code = (code << 1) | 1  # push bit
        stack.append(v)
    return code


def _decode_depths(size: int, code: int) -> list:
    # replay the parentheses to recover parents, then depths
    bits = []
    c = code
    while c:
        bits.append(c & 1)
        c >>= 1
    bits.reverse()
    parent = [-1] * size
    stack = []
    bi = 0
    for p in range(size):
        last = -1
        while bits[bi] == 0:
            last = stack.pop()
            bi += 1
        bi += 1  # the push bit
        if stack:
            parent[p] = stack[-1]
        if last >= 0:
            parent[last] = p
        stack.append(p)
    depth = [0] * size
    for p in range(size):
        d, q = 0, parent[p]
        while q >= 0:
            d += 1
            q = parent[q]
        depth[p] = d
    return depth


def argmin_table(size: int, code: int):
    """Flat (i, j) -> leftmost argmin position table for one topology."""
    key = (size, code)
    t = _ARGMIN_TABLES.get(key)
    if t is None:
        depth = _decode_depths(size, code)
        flat = [0] * (size * size)
        for i in range(size):
            best = i
            row = i * size
            for j in range(i, size):
                if depth[j] < depth[best]:
                    best = j
                flat[row + j] = best
        t = tuple(flat)
        _ARGMIN_TABLES[key] = t
    return t


class _Entry:
    """One adjacent-lcp value with its witness payload."""

    __slots__ = ("value", "witness", "node", "prev", "next",
                 "pv", "pe", "qv", "qe")

    def __init__(self, value, witness=None):
        self.value = value
        self.witness = witness
        self.node = None
        self.prev = None
        self.next = None
        self.pv = self.qv = value
        self.pe = self.qe = self


class ListHandle:
    """Position of one stored string; valid from insert until remove."""

    __slots__ = ("prev", "next", "left_entry", "right_entry", "strlen",
                 "user_data", "alive")

    def __init__(self, strlen):
        self.prev = None
        self.next = None
        self.left_entry = None
        self.right_entry = None
        self.strlen = strlen
        self.user_data = None
        self.alive = True


class _MicroNode:
    __slots__ = ("entries", "parent", "bucket", "leaf", "code", "minv", "mine")

    def __init__(self, leaf, bucket):
        self.entries = []
        self.parent = None
        self.bucket = bucket
        self.leaf = leaf
        self.code = 0
        self.minv = NEG_INF
        self.mine = None


class _Bucket:
    __slots__ = ("root", "size", "main_left", "main_right", "head", "tail")

    def __init__(self):
        self.root = None
        self.size = 0
        self.main_left = None
        self.main_right = None
        self.head = None
        self.tail = None


class _Cell:
    """One copy of a main-tree leaf value inside an ancestor's copy list."""

    __slots__ = ("leaf", "prev", "next", "pv", "pe", "qv", "qe")

    def __init__(self, leaf):
        self.leaf = leaf
        self.prev = None
        self.next = None
        self.pv = self.qv = 0
        self.pe = self.qe = None


class _MainLeaf:
    __slots__ = ("bucket", "parent", "sibnum", "pathstring", "ancestors",
                 "clones", "prev_leaf", "next_leaf", "minv", "mine")

    def __init__(self, bucket, minv, mine):
        self.bucket = bucket
        self.parent = None
        self.sibnum = 0
        self.pathstring = 0
        self.ancestors = []
        self.clones = []
        self.prev_leaf = None
        self.next_leaf = None
        self.minv = minv
        self.mine = mine


class _MainNode:
    __slots__ = ("children", "parent", "sibnum", "level", "weight",
                 "head", "tail")

    def __init__(self, level):
        self.children = []
        self.parent = None
        self.sibnum = 0
        self.level = level
        self.weight = 0
        self.head = None
        self.tail = None


class DsLcpList:
    """The DS+LCP list over caller-ordered strings.

    ``b`` is the main-tree branching parameter (must exceed 4); ``capacity``
    presizes the structure so that feeding a known number of strings avoids
    threshold rebuilds along the way.
    """

    def __init__(self, b: int = 8, capacity: int = 0):
        if b <= 4:
            raise ValueError("branching parameter must be > 4")
        self.b = b
        self.cb = (4 * b + 1).bit_length()   # bits per pathstring slot
        self.head = None
        self.tail = None
        self.size = 0
        self.probes = 0          # lcp/order query count
        self.steady_steps = 0
        self.rebuild_steps = 0
        n = _MIN_CAPACITY
        while n < capacity:
            n <<= 1
        self._set_capacity(n)
        self._root = None
        self._first_leaf = None
        self._last_leaf = None
        self._sent_left = None
        self._sent_right = None
        self._ins_count = 0
        self._split_timer = self.k
        self._oversized = set()

    def _set_capacity(self, n: int) -> None:
        self.N = n
        k = n.bit_length() - 1
        self.k = k                                   # bucket split period
        self.split_threshold = k * k                 # split candidates >= this
        self.bucket_cap = 2 * k * k                  # hard bound (Lemma 5 C=2)
        log2k = 1
        while (1 << log2k) < k:
            log2k += 1
        self.c = min(max(3, -(-k // log2k)), 24)     # micro node capacity
        self.cmin = (self.c + 1) // 2                # micro node lower bound
        self._tables_on = 2 * self.c <= 16
        self._split_timer = self.k

    # -- split queue: buckets that reached the split threshold ----------------

    def _largest_bucket(self):
        best = None
        stale = []
        for bucket in self._oversized:
            if bucket.size < self.split_threshold:
                stale.append(bucket)
            elif best is None or bucket.size > best.size:
                best = bucket
        for bucket in stale:
            self._oversized.discard(bucket)
        return best

    # -- public api ----------------------------------------------------------

    def __len__(self) -> int:
        return self.size

    def first(self):
        return self.head

    def last(self):
        return self.tail

    def next(self, h: ListHandle):
        self._check(h)
        return h.next

    def prev(self, h: ListHandle):
        self._check(h)
        return h.prev

    def adjacent_lcp(self, h: ListHandle):
        """Entry value between ``h`` and its successor, or None at the tail."""
        self._check(h)
        if h.next is None:
            return None
        return h.right_entry.value

    def adjacent_lcp_witness(self, h: ListHandle):
        self._check(h)
        if h.next is None:
            return None
        e = h.right_entry
        return e.value, e.witness

    def iter_handles(self):
        h = self.head
        while h is not None:
            yield h
            h = h.next

    def _check(self, h) -> None:
        if h is None or not isinstance(h, ListHandle) or not h.alive:
            raise InvalidHandleError("handle is not live in this list")

    def insert(self, pred, succ, lcp_pred, lcp_succ, strlen,
               witness_pred=None, witness_succ=None) -> ListHandle:
        """Place a new string between ``pred`` and ``succ``.

        Exactly the neighbors' lcp values are required; for an interior insert
        their minimum must equal the entry currently between the neighbors.
        O(1) amortized.
        """
        if pred is not None:
            self._check(pred)
        if succ is not None:
            self._check(succ)
        if pred is None and succ is None:
            if self.size != 0:
                raise AdjacencyViolation("list is not empty")
        elif pred is None:
            if succ.prev is not None:
                raise AdjacencyViolation("succ is not the first handle")
            if lcp_succ is None:
                raise ValueError("lcp_succ required")
        elif succ is None:
            if pred.next is not None:
                raise AdjacencyViolation("pred is not the last handle")
            if lcp_pred is None:
                raise ValueError("lcp_pred required")
        else:
            if pred.next is not succ:
                raise AdjacencyViolation("pred and succ are not neighbors")
            old = pred.right_entry
            if lcp_pred is None or lcp_succ is None:
                raise ValueError("both lcp values required for interior insert")
            if min(lcp_pred, lcp_succ) != old.value:
                raise MonotonicityViolation(
                    f"min({lcp_pred},{lcp_succ}) != current entry {old.value}")

        h = ListHandle(strlen)
        if pred is None and succ is None:
            self._init_structure(h)
        elif pred is None:
            e = _Entry(lcp_succ, witness_succ)
            self._insert_entry(self._sent_left, e, after=True)
            h.left_entry = self._sent_left
            h.right_entry = e
            succ.left_entry = e
        elif succ is None:
            e = _Entry(lcp_pred, witness_pred)
            self._insert_entry(self._sent_right, e, after=False)
            h.right_entry = self._sent_right
            h.left_entry = e
            pred.right_entry = e
        else:
            old = pred.right_entry
            if lcp_succ == old.value:
                # old entry becomes the succ-side pair
                old.witness = witness_succ
                e = _Entry(lcp_pred, witness_pred)
                self._insert_entry(old, e, after=False)
                pred.right_entry = e
                h.left_entry = e
                h.right_entry = old
            else:
                old.witness = witness_pred
                e = _Entry(lcp_succ, witness_succ)
                self._insert_entry(old, e, after=True)
                succ.left_entry = e
                h.left_entry = old
                h.right_entry = e

        # splice into the handle chain
        h.prev = pred
        h.next = succ
        if pred is not None:
            pred.next = h
        else:
            self.head = h
        if succ is not None:
            succ.prev = h
        else:
            self.tail = h
        self.size += 1
        self.steady_steps += 1

        self._ins_count += 1
        self._split_timer -= 1
        if self._split_timer <= 0:
            self._split_timer = self.k
            if self._oversized:
                big = self._largest_bucket()
                if big is not None:
                    self._split_bucket(big)
        if self.size > self.N:
            self._full_rebuild(self.N << 1)
        return h

    def remove(self, h: ListHandle) -> None:
        """Drop a string; the flanking entries merge to their minimum."""
        self._check(h)
        pred, succ = h.prev, h.next
        if pred is None and succ is None:
            self._teardown()
        elif pred is None:
            self._delete_entry(h.right_entry)
            succ.left_entry = self._sent_left
        elif succ is None:
            self._delete_entry(h.left_entry)
            pred.right_entry = self._sent_right
        else:
            el, er = h.left_entry, h.right_entry
            if el.value <= er.value:  # tie keeps the predecessor-side witness
                self._delete_entry(er)
                succ.left_entry = el
            else:
                self._delete_entry(el)
                pred.right_entry = er
        if pred is not None:
            pred.next = succ
        else:
            self.head = succ
        if succ is not None:
            succ.prev = pred
        else:
            self.tail = pred
        h.alive = False
        h.prev = h.next = h.left_entry = h.right_entry = None
        self.size -= 1
        self.steady_steps += 1
        if self.N > _MIN_CAPACITY and self.size < self.N >> 2:
            n = self.N
            while n > _MIN_CAPACITY and self.size < n >> 2:
                n >>= 1
            self._full_rebuild(n)

    def order(self, h1: ListHandle, h2: ListHandle) -> int:
        """Relative list position of two handles in O(1)."""
        if not (h1.alive and h2.alive):
            raise InvalidHandleError("handle is not live in this list")
        self.probes += 1
        if h1 is h2:
            return EQUAL
        a, b = h1.right_entry, h2.right_entry
        na, nb = a.node, b.node
        ba, bb = na.bucket, nb.bucket
        if ba is not bb:
            return LESS if ba.main_left.pathstring < bb.main_left.pathstring \
                else GREATER
        if na is nb:
            es = na.entries
            return LESS if es.index(a) < es.index(b) else GREATER
        while na.parent is not nb.parent:
            na = na.parent
            nb = nb.parent
        kids = na.parent.entries
        return LESS if kids.index(na) < kids.index(nb) else GREATER

    def lcp(self, h1: ListHandle, h2: ListHandle) -> int:
        """Longest common prefix of the two stored strings; O(1) amortized."""
        if not (h1.alive and h2.alive):
            raise InvalidHandleError("handle is not live in this list")
        self.probes += 1
        if h1 is h2:
            return h1.strlen
        a, b = h1.right_entry, h2.right_entry
        ba, bb = a.node.bucket, b.node.bucket
        if ba is bb:
            if self._entry_order(a, b) == GREATER:
                h1, h2 = h2, h1
                ba = bb
        elif ba.main_left.pathstring > bb.main_left.pathstring:
            h1, h2 = h2, h1
            ba, bb = bb, ba
        i = h1.right_entry
        j = h2.left_entry
        if i is j:
            return i.value
        bj = j.node.bucket
        if ba is bj:
            return self._bucket_rmq(i, j)[0]
        v = i.qv
        vp = ba.main_right
        vq = bj.main_left
        if vp.next_leaf is not vq:
            v2, _ = self._main_rmq_exclusive(vp, vq)
            if v2 < v:
                v = v2
        pv = j.pv
        return pv if pv < v else v

    def lcp_witness(self, h1: ListHandle, h2: ListHandle):
        """(lcp, witness of one minimum entry between the handles)."""
        if not (h1.alive and h2.alive):
            raise InvalidHandleError("handle is not live in this list")
        self.probes += 1
        if h1 is h2:
            return h1.strlen, None
        if self._entry_order(h1.right_entry, h2.right_entry) == GREATER:
            h1, h2 = h2, h1
        i = h1.right_entry
        j = h2.left_entry
        if i is j:
            return i.value, i.witness
        v, e = self._rmq(i, j)
        return v, e.witness

    # -- order ----------------------------------------------------------------

    def _entry_order(self, a: _Entry, b: _Entry) -> int:
        if a is b:
            return EQUAL
        na, nb = a.node, b.node
        ba, bb = na.bucket, nb.bucket
        if ba is not bb:
            pa = ba.main_left.pathstring
            pb = bb.main_left.pathstring
            return LESS if pa < pb else GREATER
        if na is nb:
            es = na.entries
            return LESS if es.index(a) < es.index(b) else GREATER
        # climb to the common micro ancestor (all micro leaves share depth)
        while na.parent is not nb.parent:
            na = na.parent
            nb = nb.parent
        kids = na.parent.entries
        return LESS if kids.index(na) < kids.index(nb) else GREATER

    # -- micro-level range minima ---------------------------------------------

    def _node_values(self, nd: _MicroNode, idx: int):
        """(value, min-achieving entry) at one in-node position."""
        x = nd.entries[idx]
        if nd.leaf:
            return x.value, x
        return x.minv, x.mine

    def _node_argmin(self, nd: _MicroNode, i: int, j: int) -> int:
        s = len(nd.entries)
        if self._tables_on:
            return argmin_table(s, nd.code)[i * s + j]
        if nd.leaf:
            vals = [e.value for e in nd.entries]
        else:
            vals = [ch.minv for ch in nd.entries]
        best = i
        for p in range(i + 1, j + 1):
            if vals[p] < vals[best]:
                best = p
        return best

    def _rebuild_micro_node(self, nd: _MicroNode) -> bool:
        """Refresh code and cached minimum; True if the minimum pair changed.

        The (code, leftmost argmin) pair depends only on the node's value
        tuple, which repeats heavily across nodes, so it is memoized.
        """
        es = nd.entries
        self.steady_steps += len(es)
        if nd.leaf:
            vals = [e.value for e in es]
        else:
            vals = [ch.minv for ch in es]
        key = tuple(vals)
        hit = _CODE_CACHE.get(key)
        if hit is None:
            code = 0
            st = []
            for i, v in enumerate(vals):
                while st and vals[st[-1]] > v:
                    st.pop()
                    code <<= 1
                code = (code << 1) | 1
                st.append(i)
            hit = (code, st[0])
            if len(_CODE_CACHE) < _CODE_CACHE_LIMIT:
                _CODE_CACHE[key] = hit
        code, idx = hit
        nd.code = code
        v = vals[idx]
        x = es[idx]
        e = x if nd.leaf else x.mine
        if v != nd.minv or e is not nd.mine:
            nd.minv, nd.mine = v, e
            return True
        return False

    def _climb_suffix_min(self, e: _Entry):
        """Suffix minimum from ``e`` to its bucket end via the micro tree."""
        nd = e.node
        i = nd.entries.index(e)
        idx = self._node_argmin(nd, i, len(nd.entries) - 1)
        bv, be = self._node_values(nd, idx)
        child, p = nd, nd.parent
        while p is not None:
            kids = p.entries
            ci = kids.index(child)
            if ci + 1 < len(kids):
                idx = self._node_argmin(p, ci + 1, len(kids) - 1)
                v, e = self._node_values(p, idx)
                if v < bv:
                    bv, be = v, e
            child, p = p, p.parent
        return bv, be

    def _climb_prefix_min(self, e: _Entry):
        nd = e.node
        i = nd.entries.index(e)
        idx = self._node_argmin(nd, 0, i)
        bv, be = self._node_values(nd, idx)
        child, p = nd, nd.parent
        while p is not None:
            kids = p.entries
            ci = kids.index(child)
            if ci > 0:
                idx = self._node_argmin(p, 0, ci - 1)
                v, e = self._node_values(p, idx)
                if v <= bv:  # the higher piece lies further left; ties go left
                    bv, be = v, e
            child, p = p, p.parent
        return bv, be

    def _bucket_rmq(self, i: _Entry, j: _Entry):
        ni, nj = i.node, j.node
        if ni is nj:
            es = ni.entries
            s = len(es)
            if self._tables_on:
                x = es[argmin_table(s, ni.code)[es.index(i) * s + es.index(j)]]
                return x.value, x
            idx = self._node_argmin(ni, es.index(i), es.index(j))
            return self._node_values(ni, idx)
        return self._bucket_rmq_exact(i, j, ni, nj)

    def _bucket_rmq_exact(self, i, j, ni, nj):
        # left-side pieces bottom-up, middle at the fork, right-side top-down
        tables = self._tables_on
        pi = ni.entries.index(i)
        idx = self._node_argmin(ni, pi, len(ni.entries) - 1)
        bv, be = self._node_values(ni, idx)
        rights = []
        ci, cj = ni, nj
        while ci.parent is not cj.parent:
            pci, pcj = ci.parent, cj.parent
            kids = pci.entries
            k = kids.index(ci)
            n = len(kids)
            if k + 1 < n:
                if tables:
                    ch = kids[argmin_table(n, pci.code)[(k + 1) * n + n - 1]]
                    v, e = ch.minv, ch.mine
                else:
                    v, e = self._node_values(
                        pci, self._node_argmin(pci, k + 1, n - 1))
                if v < bv:
                    bv, be = v, e
            kids = pcj.entries
            k = kids.index(cj)
            if k > 0:
                n = len(kids)
                if tables:
                    ch = kids[argmin_table(n, pcj.code)[k - 1]]
                    rights.append((ch.minv, ch.mine))
                else:
                    rights.append(self._node_values(
                        pcj, self._node_argmin(pcj, 0, k - 1)))
            ci, cj = pci, pcj
        top = ci.parent
        kids = top.entries
        a, b = kids.index(ci), kids.index(cj)
        if a + 1 <= b - 1:
            n = len(kids)
            if tables:
                ch = kids[argmin_table(n, top.code)[(a + 1) * n + b - 1]]
                v, e = ch.minv, ch.mine
            else:
                v, e = self._node_values(top, self._node_argmin(top, a + 1, b - 1))
            if v < bv:
                bv, be = v, e
        for v, e in reversed(rights):
            if v < bv:
                bv, be = v, e
        pj = nj.entries.index(j)
        n = len(nj.entries)
        if tables:
            x = nj.entries[argmin_table(n, nj.code)[pj]]
            v, e = x.value, x
        else:
            v, e = self._node_values(nj, self._node_argmin(nj, 0, pj))
        if v < bv:
            bv, be = v, e
        return bv, be

    # -- full range minimum ----------------------------------------------------

    def _rmq(self, i: _Entry, j: _Entry):
        bi, bj = i.node.bucket, j.node.bucket
        if bi is bj:
            return self._bucket_rmq(i, j)
        bv, be = i.qv, i.qe
        vp = bi.main_right
        vq = bj.main_left
        if vp.next_leaf is not vq:
            v, e = self._main_rmq_exclusive(vp, vq)
            if v < bv:
                bv, be = v, e
        if j.pv < bv:
            bv, be = j.pv, j.pe
        return bv, be

    def _main_rmq_exclusive(self, vp: _MainLeaf, vq: _MainLeaf):
        """Minimum over main-tree leaves strictly between vp and vq."""
        x = vp.pathstring ^ vq.pathstring
        k = (x.bit_length() - 1) // self.cb  # level of the diverging children
        lca = vp.ancestors[k]
        if k == 0:
            bv, be = None, None
            for leaf in lca.children[vp.sibnum + 1:vq.sibnum]:
                if bv is None or leaf.minv < bv:
                    bv, be = leaf.minv, leaf.mine
            return bv, be
        cp = vp.ancestors[k - 1]
        cq = vq.ancestors[k - 1]
        bv, be = None, None
        cell = vp.clones[k - 1].next
        if cell is not None:
            bv, be = cell.qv, cell.qe
        for sib in lca.children[cp.sibnum + 1:cq.sibnum]:
            head = sib.head
            if bv is None or head.qv < bv:
                bv, be = head.qv, head.qe
        cell = vq.clones[k - 1].prev
        if cell is not None:
            if bv is None or cell.pv < bv:
                bv, be = cell.pv, cell.pe
        return bv, be

    # -- bucket-chain minima -----------------------------------------------------

    def _entry_refresh(self, e: _Entry) -> None:
        v = e.value
        prev, nxt = e.prev, e.next
        if prev is not None and prev.pv <= v:
            e.pv, e.pe = prev.pv, prev.pe
        else:
            e.pv, e.pe = v, e
        if nxt is not None and nxt.qv < v:
            e.qv, e.qe = nxt.qv, nxt.qe
        else:
            e.qv, e.qe = v, e

    def _entry_refresh_prefix(self, e: _Entry) -> bool:
        v = e.value
        prev = e.prev
        if prev is not None and prev.pv <= v:
            pv, pe = prev.pv, prev.pe
        else:
            pv, pe = v, e
        if pv != e.pv or pe is not e.pe:
            e.pv, e.pe = pv, pe
            return True
        return False

    def _entry_refresh_suffix(self, e: _Entry) -> bool:
        v = e.value
        nxt = e.next
        if nxt is not None and nxt.qv < v:
            qv, qe = nxt.qv, nxt.qe
        else:
            qv, qe = v, e
        if qv != e.qv or qe is not e.qe:
            e.qv, e.qe = qv, qe
            return True
        return False

    def _repair_entry(self, e: _Entry) -> None:
        self._entry_refresh(e)
        c = e.next
        while c is not None and self._entry_refresh_prefix(c):
            self.steady_steps += 1
            c = c.next
        c = e.prev
        while c is not None and self._entry_refresh_suffix(c):
            self.steady_steps += 1
            c = c.prev

    # -- entry insertion / deletion --------------------------------------------

    def _insert_entry(self, anchor: _Entry, e: _Entry, after: bool) -> None:
        nd = anchor.node
        es = nd.entries
        pos = es.index(anchor) + 1 if after else es.index(anchor)
        n = len(es)
        bucket = nd.bucket
        root = bucket.root
        old_minv, old_mine = root.minv, root.mine
        size = bucket.size + 1
        bucket.size = size
        if size >= self.split_threshold:
            self._oversized.add(bucket)
        # Monotonicity bounds the new value below by its anchor, so inserts at
        # a node's ends are O(1) code edits: an append adds one push bit (the
        # spine top is the anchor, nothing pops); a prepend adds a push and, if
        # strictly greater, one pop consumed by the old first element.
        self.steady_steps += 1
        v = e.value
        changed = False
        if pos == n:
            es.append(e)
            nd.code = (nd.code << 1) | 1
        elif pos == 0 and v > es[0].value:
            # strictly greater: the old first element pops it immediately,
            # leaving the rest of the parenthesis stream untouched
            es.insert(0, e)
            nd.code = (2 << nd.code.bit_length()) | nd.code
        else:
            es.insert(pos, e)
            changed = self._rebuild_micro_node(nd)
        e.node = nd
        if after:
            e.prev, e.next = anchor, anchor.next
            anchor.next = e
            if e.next is not None:
                e.next.prev = e
            else:
                bucket.tail = e
        else:
            e.prev, e.next = anchor.prev, anchor
            anchor.prev = e
            if e.prev is not None:
                e.prev.next = e
            else:
                bucket.head = e
        self._repair_entry(e)
        if n + 1 > self.c:
            self._split_micro(nd)
        elif changed:
            self._propagate_min_up(nd.parent)
        root = bucket.root
        if root.minv != old_minv or root.mine is not old_mine:
            self._bucket_min_changed(bucket)
        if size > self.bucket_cap:
            self._split_bucket(bucket)

    def _propagate_min_up(self, nd) -> None:
        while nd is not None and self._rebuild_micro_node(nd):
            nd = nd.parent

    def _split_micro(self, nd: _MicroNode) -> None:
        self.rebuild_steps += len(nd.entries)
        mid = len(nd.entries) // 2
        rn = _MicroNode(nd.leaf, nd.bucket)
        rn.entries = nd.entries[mid:]
        del nd.entries[mid:]
        if nd.leaf:
            for e in rn.entries:
                e.node = rn
        else:
            for ch in rn.entries:
                ch.parent = rn
        self._rebuild_micro_node(nd)
        self._rebuild_micro_node(rn)
        p = nd.parent
        if p is None:
            root = _MicroNode(False, nd.bucket)
            root.entries = [nd, rn]
            nd.parent = rn.parent = root
            nd.bucket.root = root
            self._rebuild_micro_node(root)
        else:
            p.entries.insert(p.entries.index(nd) + 1, rn)
            rn.parent = p
            if len(p.entries) > self.c:
                self._split_micro(p)
            else:
                self._propagate_min_up(p)

    def _rebuild_micro_upward(self, nd: _MicroNode) -> None:
        while nd is not None:
            self._rebuild_micro_node(nd)
            nd = nd.parent

    def _delete_entry(self, e: _Entry) -> None:
        nd = e.node
        bucket = nd.bucket
        old_minv, old_mine = bucket.root.minv, bucket.root.mine
        nd.entries.remove(e)
        e.node = None
        prev, nxt = e.prev, e.next
        if prev is not None:
            prev.next = nxt
        else:
            bucket.head = nxt
        if nxt is not None:
            nxt.prev = prev
        else:
            bucket.tail = prev
        e.prev = e.next = None
        bucket.size -= 1
        if bucket.size == 0:
            self._remove_bucket(bucket)
            return
        if nxt is not None:
            self._repair_entry(nxt)
        elif prev is not None:
            self._repair_entry(prev)
        if not nd.entries:
            self._drop_empty_micro(nd)
        elif len(nd.entries) < self.cmin and nd.parent is not None:
            self._fix_micro_underflow(nd)
        else:
            self._rebuild_micro_upward(nd)
        root = bucket.root
        if root.minv != old_minv or root.mine is not old_mine:
            self._bucket_min_changed(bucket)

    def _drop_empty_micro(self, nd: _MicroNode) -> None:
        p = nd.parent
        if p is None:
            return  # empty bucket handled by the caller
        p.entries.remove(nd)
        nd.parent = None
        if not p.entries:
            self._drop_empty_micro(p)
        elif len(p.entries) < self.cmin and p.parent is not None:
            self._fix_micro_underflow(p)
        else:
            self._rebuild_micro_upward(p)
            self._shrink_micro_root(nd.bucket)

    def _fix_micro_underflow(self, nd: _MicroNode) -> None:
        self.rebuild_steps += len(nd.entries)
        p = nd.parent
        i = p.entries.index(nd)
        if i + 1 < len(p.entries):
            left, right, ri = nd, p.entries[i + 1], i + 1
        else:
            left, right, ri = p.entries[i - 1], nd, i
        merged = left.entries + right.entries
        if len(merged) > self.c:
            mid = len(merged) // 2
            left.entries = merged[:mid]
            right.entries = merged[mid:]
            for home, group in ((left, left.entries), (right, right.entries)):
                if home.leaf:
                    for e in group:
                        e.node = home
                else:
                    for ch in group:
                        ch.parent = home
            self._rebuild_micro_node(left)
            self._rebuild_micro_node(right)
            self._rebuild_micro_upward(p)
        else:
            left.entries = merged
            if left.leaf:
                for e in merged:
                    e.node = left
            else:
                for ch in merged:
                    ch.parent = left
            p.entries.pop(ri)
            right.parent = None
            self._rebuild_micro_node(left)
            if len(p.entries) < self.cmin and p.parent is not None:
                self._fix_micro_underflow(p)
            else:
                self._rebuild_micro_upward(p)
                self._shrink_micro_root(nd.bucket)

    def _shrink_micro_root(self, bucket: _Bucket) -> None:
        root = bucket.root
        while not root.leaf and len(root.entries) == 1:
            root = root.entries[0]
            root.parent = None
            bucket.root = root

    # -- bucket construction and splitting --------------------------------------

    def _iter_bucket_entries(self, bucket: _Bucket):
        out = []
        stack = [bucket.root]
        while stack:
            nd = stack.pop()
            if nd.leaf:
                out.extend(nd.entries)
            else:
                stack.extend(reversed(nd.entries))
        return out

    def _build_micro(self, bucket: _Bucket, entries) -> None:
        """Rebuild the bucket's micro tree and minima chain over ``entries``.

        Each micro level packs its items into nodes of nearly equal size
        within [cmin, c].
        """
        self.rebuild_steps += len(entries)
        prev = None
        for e in entries:
            e.prev = prev
            if prev is not None:
                prev.next = e
                if prev.pv <= e.value:
                    e.pv, e.pe = prev.pv, prev.pe
                else:
                    e.pv, e.pe = e.value, e
            else:
                e.pv, e.pe = e.value, e
            prev = e
        prev.next = None
        bucket.head, bucket.tail = entries[0], prev
        nxt = None
        for e in reversed(entries):
            if nxt is not None and nxt.qv < e.value:
                e.qv, e.qe = nxt.qv, nxt.qe
            else:
                e.qv, e.qe = e.value, e
            nxt = e
        cap = self.c
        level = entries
        leaf = True
        while True:
            n = len(level)
            num = max(1, -(-n // cap))
            base, extra = divmod(n, num)
            up = []
            i = 0
            for g in range(num):
                size = base + (1 if g < extra else 0)
                nd = _MicroNode(leaf, bucket)
                group = level[i:i + size]
                nd.entries = group
                i += size
                if leaf:
                    for e in group:
                        e.node = nd
                else:
                    for ch in group:
                        ch.parent = nd
                self._rebuild_micro_node(nd)
                up.append(nd)
            if num == 1:
                root = up[0]
                root.parent = None
                bucket.root = root
                return
            level = up
            leaf = False

    def _split_bucket(self, bucket: _Bucket) -> None:
        entries = self._iter_bucket_entries(bucket)
        if len(entries) < 2:
            return
        self.rebuild_steps += len(entries)
        mid = len(entries) // 2
        left, right = entries[:mid], entries[mid:]
        b2 = _Bucket()
        self._oversized.discard(bucket)
        bucket.size = len(left)
        b2.size = len(right)
        if bucket.size >= self.split_threshold:
            self._oversized.add(bucket)
        if b2.size >= self.split_threshold:
            self._oversized.add(b2)
        self._build_micro(bucket, left)
        self._build_micro(b2, right)
        m1v, m1e = bucket.root.minv, bucket.root.mine
        m2v, m2e = b2.root.minv, b2.root.mine
        vl, vr = bucket.main_left, bucket.main_right
        if m1v <= m2v:
            x1 = self._insert_main_leaf(vr, b2, m2v, m2e, after=True)
            x2 = self._insert_main_leaf(x1, b2, m2v, m2e, after=True)
            b2.main_left, b2.main_right = x1, x2
        else:
            vl.bucket = vr.bucket = b2
            b2.main_left, b2.main_right = vl, vr
            x1 = self._insert_main_leaf(vl, bucket, m1v, m1e, after=False)
            x2 = self._insert_main_leaf(vl, bucket, m1v, m1e, after=False)
            bucket.main_left, bucket.main_right = x1, x2

    def _bucket_min_changed(self, bucket: _Bucket) -> None:
        v, e = bucket.root.minv, bucket.root.mine
        for leaf in (bucket.main_left, bucket.main_right):
            leaf.minv, leaf.mine = v, e
            for cell in leaf.clones:
                self._repair_cell(cell)

    # -- main-tree copy lists ----------------------------------------------------

    def _cell_refresh(self, cell: _Cell) -> bool:
        """Recompute one cell's prefix/suffix minima; True if either changed."""
        leaf = cell.leaf
        v, e = leaf.minv, leaf.mine
        prev, nxt = cell.prev, cell.next
        if prev is not None and prev.pv <= v:
            pv, pe = prev.pv, prev.pe
        else:
            pv, pe = v, e
        if nxt is not None and nxt.qv < v:
            qv, qe = nxt.qv, nxt.qe
        else:
            qv, qe = v, e
        changed = (pv != cell.pv or pe is not cell.pe or
                   qv != cell.qv or qe is not cell.qe)
        cell.pv, cell.pe, cell.qv, cell.qe = pv, pe, qv, qe
        return changed

    def _repair_cell(self, cell: _Cell) -> None:
        """Re-establish minima around a changed or respliced position."""
        self._cell_refresh(cell)
        c = cell.next
        while c is not None and self._cell_refresh_prefix(c):
            self.steady_steps += 1
            c = c.next
        c = cell.prev
        while c is not None and self._cell_refresh_suffix(c):
            self.steady_steps += 1
            c = c.prev

    def _cell_refresh_prefix(self, cell: _Cell) -> bool:
        leaf = cell.leaf
        v, e = leaf.minv, leaf.mine
        prev = cell.prev
        if prev is not None and prev.pv <= v:
            pv, pe = prev.pv, prev.pe
        else:
            pv, pe = v, e
        if pv != cell.pv or pe is not cell.pe:
            cell.pv, cell.pe = pv, pe
            return True
        return False

    def _cell_refresh_suffix(self, cell: _Cell) -> bool:
        leaf = cell.leaf
        v, e = leaf.minv, leaf.mine
        nxt = cell.next
        if nxt is not None and nxt.qv < v:
            qv, qe = nxt.qv, nxt.qe
        else:
            qv, qe = v, e
        if qv != cell.qv or qe is not cell.qe:
            cell.qv, cell.qe = qv, qe
            return True
        return False

    # -- main-tree leaves ----------------------------------------------------------

    def _slot_set(self, ps: int, level: int, val: int) -> int:
        shift = level * self.cb
        mask = ((1 << self.cb) - 1) << shift
        return (ps & ~mask) | (val << shift)

    def _insert_main_leaf(self, anchor: _MainLeaf, bucket, minv, minw,
                          after: bool) -> _MainLeaf:
        leaf = _MainLeaf(bucket, minv, minw)
        p = anchor.parent
        pos = anchor.sibnum + (1 if after else 0)
        p.children.insert(pos, leaf)
        for sib in p.children[pos + 1:]:
            sib.sibnum += 1
            sib.pathstring = self._slot_set(sib.pathstring, 0, sib.sibnum)
            self.steady_steps += 1
        leaf.parent = p
        leaf.sibnum = pos
        leaf.pathstring = self._slot_set(anchor.pathstring, 0, pos)
        leaf.ancestors = anchor.ancestors[:]
        if after:
            leaf.prev_leaf, leaf.next_leaf = anchor, anchor.next_leaf
        else:
            leaf.prev_leaf, leaf.next_leaf = anchor.prev_leaf, anchor
        if leaf.prev_leaf is not None:
            leaf.prev_leaf.next_leaf = leaf
        else:
            self._first_leaf = leaf
        if leaf.next_leaf is not None:
            leaf.next_leaf.prev_leaf = leaf
        else:
            self._last_leaf = leaf
        for lvl, u in enumerate(leaf.ancestors):
            u.weight += 1
            cell = _Cell(leaf)
            base = anchor.clones[lvl]
            if after:
                cell.prev, cell.next = base, base.next
                base.next = cell
                if cell.next is not None:
                    cell.next.prev = cell
                else:
                    u.tail = cell
            else:
                cell.prev, cell.next = base.prev, base
                base.prev = cell
                if cell.prev is not None:
                    cell.prev.next = cell
                else:
                    u.head = cell
            self._cell_refresh(cell)
            leaf.clones.append(cell)
            self.steady_steps += 1
        # weight constraints, bottom-up
        lvl = 1
        while lvl <= len(leaf.ancestors):
            u = leaf.ancestors[lvl - 1]
            if (u.level == 1 and len(u.children) > 2 * self.b - 1) or \
               (u.level > 1 and u.weight >= 2 * self.b ** u.level):
                self._split_main(u)
            lvl += 1
        return leaf

    def _iter_subtree_leaves(self, node):
        if isinstance(node, _MainLeaf):
            yield node
            return
        stack = [node]
        while stack:
            nd = stack.pop()
            if isinstance(nd, _MainLeaf):
                yield nd
            else:
                stack.extend(reversed(nd.children))

    def _new_root_over(self, old_root: _MainNode) -> _MainNode:
        root = _MainNode(old_root.level + 1)
        root.children = [old_root]
        root.weight = old_root.weight
        old_root.parent = root
        old_root.sibnum = 0
        self._root = root
        # give the new root its own copy list over every leaf
        prev = None
        leaf = self._first_leaf
        while leaf is not None:
            cell = _Cell(leaf)
            cell.prev = prev
            if prev is None:
                root.head = cell
            else:
                prev.next = cell
            leaf.clones.append(cell)
            leaf.ancestors.append(root)
            prev = cell
            leaf = leaf.next_leaf
            self.rebuild_steps += 1
        root.tail = prev
        self._recompute_list_minima(root)
        return root

    def _recompute_list_minima(self, u: _MainNode) -> None:
        cell = u.head
        while cell is not None:
            self._cell_refresh_prefix(cell)
            self.rebuild_steps += 1
            cell = cell.next
        cell = u.tail
        while cell is not None:
            self._cell_refresh_suffix(cell)
            cell = cell.prev

    def _split_main(self, u: _MainNode) -> None:
        if u.parent is None:
            self._new_root_over(u)
        p = u.parent
        lvl = u.level
        kids = u.children
        if lvl == 1:
            mid = len(kids) // 2
        else:
            half = u.weight // 2
            acc = 0
            mid = 0
            while mid < len(kids) - 1 and acc + kids[mid].weight <= half:
                acc += kids[mid].weight
                mid += 1
            mid = max(1, mid)
        u2 = _MainNode(lvl)
        u2.children = kids[mid:]
        del kids[mid:]
        if lvl == 1:
            u.weight = len(kids)
            u2.weight = len(u2.children)
        else:
            u.weight = sum(ch.weight for ch in kids)
            u2.weight = sum(ch.weight for ch in u2.children)
        for i, ch in enumerate(u2.children):
            ch.parent = u2
            ch.sibnum = i
        u2.parent = p
        u2.sibnum = u.sibnum + 1
        p.children.insert(u2.sibnum, u2)
        for sib in p.children[u2.sibnum + 1:]:
            sib.sibnum += 1
        # cut the copy list at u2's leftmost leaf
        first2 = u2.children[0]
        while isinstance(first2, _MainNode):
            first2 = first2.children[0]
        bcell = first2.clones[lvl - 1]
        u2.head, u2.tail = bcell, u.tail
        u.tail = bcell.prev
        if u.tail is not None:
            u.tail.next = None
        bcell.prev = None
        self._recompute_list_minima(u)
        self._recompute_list_minima(u2)
        # re-anchor pathstrings and ancestor arrays below the split
        for leaf in self._iter_subtree_leaves(u2):
            leaf.ancestors[lvl - 1] = u2
            ps = self._slot_set(leaf.pathstring, lvl, u2.sibnum)
            if lvl > 1:
                ps = self._slot_set(ps, lvl - 1, leaf.ancestors[lvl - 2].sibnum)
            else:
                ps = self._slot_set(ps, 0, leaf.sibnum)
            leaf.pathstring = ps
            self.rebuild_steps += 1
        for sib in p.children[u2.sibnum + 1:]:
            for leaf in self._iter_subtree_leaves(sib):
                leaf.pathstring = self._slot_set(leaf.pathstring, lvl, sib.sibnum)
                self.rebuild_steps += 1

    def _remove_main_leaf(self, leaf: _MainLeaf) -> None:
        for lvl, u in enumerate(leaf.ancestors):
            cell = leaf.clones[lvl]
            prev, nxt = cell.prev, cell.next
            if prev is not None:
                prev.next = nxt
            else:
                u.head = nxt
            if nxt is not None:
                nxt.prev = prev
            else:
                u.tail = prev
            if nxt is not None:
                self._repair_cell(nxt)
            elif prev is not None:
                self._repair_cell(prev)
            u.weight -= 1
        p = leaf.parent
        p.children.pop(leaf.sibnum)
        for sib in p.children[leaf.sibnum:]:
            sib.sibnum -= 1
            sib.pathstring = self._slot_set(sib.pathstring, 0, sib.sibnum)
            self.steady_steps += 1
        if leaf.prev_leaf is not None:
            leaf.prev_leaf.next_leaf = leaf.next_leaf
        else:
            self._first_leaf = leaf.next_leaf
        if leaf.next_leaf is not None:
            leaf.next_leaf.prev_leaf = leaf.prev_leaf
        else:
            self._last_leaf = leaf.prev_leaf
        ancestors = leaf.ancestors
        lvl = 1
        while lvl <= len(ancestors):
            u = ancestors[lvl - 1]
            if u.parent is None:
                self._maybe_shrink_root(u)
                break
            if (u.level == 1 and len(u.children) < self.b) or \
               (u.level > 1 and 2 * u.weight <= self.b ** u.level):
                self._fix_main_underflow(u)
            lvl += 1

    def _maybe_shrink_root(self, root: _MainNode) -> None:
        while root.level > 1 and len(root.children) == 1:
            child = root.children[0]
            child.parent = None
            child.sibnum = 0
            leaf = self._first_leaf
            while leaf is not None:
                leaf.ancestors.pop()
                leaf.clones.pop()
                leaf = leaf.next_leaf
                self.rebuild_steps += 1
            self._root = child
            root = child

    def _fix_main_underflow(self, u: _MainNode) -> None:
        p = u.parent
        i = u.sibnum
        if i + 1 < len(p.children):
            left, right = u, p.children[i + 1]
        else:
            left, right = p.children[i - 1], u
        lvl = u.level
        self.rebuild_steps += left.weight + right.weight
        # concatenate the copy lists, then re-derive both minima chains
        if left.tail is not None:
            left.tail.next = right.head
        if right.head is not None:
            right.head.prev = left.tail
            left.tail = right.tail
        if left.head is None:
            left.head, left.tail = right.head, right.tail
        base = len(left.children)
        for off, ch in enumerate(right.children):
            ch.parent = left
            ch.sibnum = base + off
        left.children.extend(right.children)
        left.weight += right.weight
        p.children.pop(right.sibnum)
        for sib in p.children[right.sibnum:]:
            sib.sibnum -= 1
        right.parent = None
        for leaf in self._iter_subtree_leaves(left):
            leaf.ancestors[lvl - 1] = left
            ps = self._slot_set(leaf.pathstring, lvl, left.sibnum)
            if lvl > 1:
                ps = self._slot_set(ps, lvl - 1, leaf.ancestors[lvl - 2].sibnum)
            else:
                ps = self._slot_set(ps, 0, leaf.sibnum)
            leaf.pathstring = ps
        for sib in p.children[left.sibnum + 1:]:
            for leaf in self._iter_subtree_leaves(sib):
                leaf.pathstring = self._slot_set(leaf.pathstring, lvl, sib.sibnum)
                self.rebuild_steps += 1
        self._recompute_list_minima(left)
        if (lvl == 1 and len(left.children) > 2 * self.b - 1) or \
           (lvl > 1 and left.weight >= 2 * self.b ** lvl):
            self._split_main(left)
        if p.parent is None:
            self._maybe_shrink_root(p)
        elif (p.level == 1 and len(p.children) < self.b) or \
             (p.level > 1 and 2 * p.weight <= self.b ** p.level):
            self._fix_main_underflow(p)

    def _remove_bucket(self, bucket: _Bucket) -> None:
        self._oversized.discard(bucket)
        self._remove_main_leaf(bucket.main_left)
        self._remove_main_leaf(bucket.main_right)
        bucket.root = None

    # -- structure lifecycle -------------------------------------------------------

    def _init_structure(self, h: ListHandle) -> None:
        self._sent_left = _Entry(NEG_INF)
        self._sent_right = _Entry(NEG_INF)
        h.left_entry = self._sent_left
        h.right_entry = self._sent_right
        bucket = _Bucket()
        bucket.size = 2
        self._build_micro(bucket, [self._sent_left, self._sent_right])
        root = _MainNode(1)
        vl = _MainLeaf(bucket, NEG_INF, bucket.root.mine)
        vr = _MainLeaf(bucket, NEG_INF, bucket.root.mine)
        bucket.main_left, bucket.main_right = vl, vr
        root.children = [vl, vr]
        root.weight = 2
        for i, leaf in enumerate((vl, vr)):
            leaf.parent = root
            leaf.sibnum = i
            leaf.pathstring = i
            leaf.ancestors = [root]
            cell = _Cell(leaf)
            cell.pv = cell.qv = NEG_INF
            cell.pe = cell.qe = leaf.mine
            leaf.clones = [cell]
        c1, c2 = vl.clones[0], vr.clones[0]
        c1.next, c2.prev = c2, c1
        root.head, root.tail = c1, c2
        vl.next_leaf, vr.prev_leaf = vr, vl
        self._first_leaf, self._last_leaf = vl, vr
        self._root = root

    def _teardown(self) -> None:
        self._root = None
        self._first_leaf = self._last_leaf = None
        self._sent_left = self._sent_right = None
        self._oversized.clear()
        self._ins_count = 0

    def _full_rebuild(self, new_n: int) -> None:
        handles = list(self.iter_handles())
        if not handles:
            self._set_capacity(new_n)
            return
        entries = [self._sent_left]
        for h in handles[:-1]:
            entries.append(h.right_entry)
        entries.append(self._sent_right)
        self.rebuild_steps += len(entries)
        self._set_capacity(new_n)
        self._oversized.clear()
        target = max(2, self.split_threshold // 2)
        buckets = []
        for i in range(0, len(entries), target):
            group = entries[i:i + target]
            bucket = _Bucket()
            bucket.size = len(group)
            self._build_micro(bucket, group)
            buckets.append(bucket)
        self._build_main(buckets)

    def _build_main(self, buckets) -> None:
        b = self.b
        leaves = []
        prev = None
        for bucket in buckets:
            vl = _MainLeaf(bucket, bucket.root.minv, bucket.root.mine)
            vr = _MainLeaf(bucket, bucket.root.minv, bucket.root.mine)
            bucket.main_left, bucket.main_right = vl, vr
            for leaf in (vl, vr):
                leaf.prev_leaf = prev
                if prev is not None:
                    prev.next_leaf = leaf
                prev = leaf
                leaves.append(leaf)
        self._first_leaf, self._last_leaf = leaves[0], leaves[-1]
        self.rebuild_steps += len(leaves)

        def chunk(items, lo, hi):
            out = []
            i = 0
            n = len(items)
            step = (lo + hi) // 2
            while i < n:
                rem = n - i
                if rem <= hi:
                    take = rem
                elif rem - step >= lo:
                    take = step
                else:
                    take = rem - lo
                out.append(items[i:i + take])
                i += take
            return out

        level_nodes = []
        for group in chunk(leaves, b, 2 * b - 1):
            nd = _MainNode(1)
            nd.children = group
            nd.weight = len(group)
            for i, leaf in enumerate(group):
                leaf.parent = nd
                leaf.sibnum = i
            level_nodes.append(nd)
        lvl = 1
        while len(level_nodes) > 1:
            lvl += 1
            target_w = b ** lvl
            up = []
            cur = _MainNode(lvl)
            for nd in level_nodes:
                cur.children.append(nd)
                cur.weight += nd.weight
                if cur.weight >= target_w:
                    up.append(cur)
                    cur = _MainNode(lvl)
            if cur.children:
                if up and 2 * cur.weight <= target_w:
                    up[-1].children.extend(cur.children)
                    up[-1].weight += cur.weight
                else:
                    up.append(cur)
            for nd in up:
                for i, ch in enumerate(nd.children):
                    ch.parent = nd
                    ch.sibnum = i
            level_nodes = up
        root = level_nodes[0]
        root.parent = None
        root.sibnum = 0
        self._root = root
        # pathstrings, ancestor arrays, copy lists
        height = root.level
        for leaf in leaves:
            anc = []
            ps = 0
            node = leaf
            for l in range(height):
                ps |= node.sibnum << (l * self.cb)
                node = node.parent
                anc.append(node)
            leaf.pathstring = ps
            leaf.ancestors = anc
            leaf.clones = [None] * height
            self.rebuild_steps += height
        stack = [root]
        while stack:
            u = stack.pop()
            prev_cell = None
            for leaf in self._iter_subtree_leaves(u):
                cell = _Cell(leaf)
                cell.prev = prev_cell
                if prev_cell is None:
                    u.head = cell
                else:
                    prev_cell.next = cell
                leaf.clones[u.level - 1] = cell
                prev_cell = cell
            u.tail = prev_cell
            self._recompute_list_minima(u)
            for ch in u.children:
                if isinstance(ch, _MainNode):
                    stack.append(ch)

    # -- diagnostics -----------------------------------------------------------------

    def validate_structure(self) -> list:
        """Audit every internal invariant; returns human-readable violations."""
        out = []
        if self.size == 0:
            if self._root is not None:
                out.append("empty list still holds a main tree")
            return out
        # handle chain and entry flanks
        seen = 0
        h = self.head
        prev = None
        while h is not None:
            seen += 1
            if h.prev is not prev:
                out.append("handle chain prev link broken")
            if prev is None and h.left_entry is not self._sent_left:
                out.append("first handle not flanked by the left sentinel")
            if h.next is None and h.right_entry is not self._sent_right:
                out.append("last handle not flanked by the right sentinel")
            if h.next is not None and h.right_entry is not h.next.left_entry:
                out.append("adjacent handles disagree on their shared entry")
            if h.next is not None and h.right_entry.value < 0:
                out.append("interior entry with negative value")
            prev, h = h, h.next
        if seen != self.size:
            out.append(f"size {self.size} but chain has {seen} handles")
        # bucket concatenation equals the entry sequence
        expect = [self._sent_left]
        h = self.head
        while h is not None and h.next is not None:
            expect.append(h.right_entry)
            h = h.next
        expect.append(self._sent_right)
        got = []
        leaf = self._first_leaf
        buckets = []
        while leaf is not None:
            if leaf.bucket.main_left is leaf:
                buckets.append(leaf.bucket)
                if leaf.next_leaf is None or leaf.next_leaf.bucket is not leaf.bucket:
                    out.append("bucket boundary leaves not adjacent")
                got.extend(self._iter_bucket_entries(leaf.bucket))
            elif leaf.bucket.main_right is not leaf:
                out.append("leaf belongs to neither side of its bucket")
            leaf = leaf.next_leaf
        if got != expect:
            out.append("bucket concatenation does not match the entry sequence")
        # micro trees and bucket minima chains
        for bucket in buckets:
            seq = self._iter_bucket_entries(bucket)
            if bucket.size != len(seq):
                out.append("bucket size counter is stale")
            if bucket.size > self.bucket_cap:
                out.append(f"bucket of size {bucket.size} exceeds cap {self.bucket_cap}")
            self._validate_micro(bucket.root, bucket, True, out)
            chain = []
            e = bucket.head
            while e is not None:
                chain.append(e)
                e = e.next
            if chain != seq or bucket.tail is not (chain[-1] if chain else None):
                out.append("bucket chain does not match micro-tree order")
            pv, pe = None, None
            for e in chain:
                if pv is None or e.value < pv:
                    pv, pe = e.value, e
                if e.pv != pv or e.pe is not pe:
                    out.append("bucket chain prefix minimum mismatch")
            qv, qe = None, None
            for e in reversed(chain):
                if qv is None or e.value <= qv:
                    qv, qe = e.value, e
                if e.qv != qv or e.qe is not qe:
                    out.append("bucket chain suffix minimum mismatch")
            for leaf in (bucket.main_left, bucket.main_right):
                if leaf.minv != bucket.root.minv or leaf.mine is not bucket.root.mine:
                    out.append("main leaf does not mirror its bucket minimum")
        # main tree
        self._validate_main(self._root, out)
        return out

    def _validate_micro(self, nd, bucket, is_root, out) -> None:
        if nd.bucket is not bucket:
            out.append("micro node bucket reference is stale")
        size = len(nd.entries)
        if size > self.c:
            out.append(f"micro node holds {size} > c={self.c} entries")
        if not is_root and size < self.cmin:
            out.append("non-root micro node underflows")
        if nd.leaf:
            vals = [e.value for e in nd.entries]
            for e in nd.entries:
                if e.node is not nd:
                    out.append("entry does not know its micro node")
        else:
            vals = [ch.minv for ch in nd.entries]
            for ch in nd.entries:
                if ch.parent is not nd:
                    out.append("micro child does not know its parent")
                self._validate_micro(ch, bucket, False, out)
        if nd.code != cartesian_code(vals):
            out.append("cartesian code does not match the node's values")
        if vals:
            best = min(range(size), key=vals.__getitem__)
            v, e = self._node_values(nd, best)
            if v != nd.minv or e is not nd.mine:
                out.append("cached micro minimum is wrong")

    def _validate_main(self, u, out) -> None:
        b = self.b
        if u.parent is None:
            if u.level > 1 and len(u.children) < 2:
                out.append("root has fewer than 2 children")
        else:
            if u.level == 1:
                if not b <= len(u.children) <= 2 * b - 1:
                    out.append(f"level-1 node with {len(u.children)} leaves")
            else:
                w = u.weight
                if not (b ** u.level / 2 < w < 2 * b ** u.level):
                    out.append(f"level-{u.level} node weight {w} out of range")
                if not (b / 4 <= len(u.children) <= 4 * b):
                    out.append(f"level-{u.level} fan-out {len(u.children)} out of range")
        leaves = list(self._iter_subtree_leaves(u))
        if u.level == 1:
            if u.weight != len(leaves):
                out.append("level-1 weight differs from leaf count")
        else:
            if u.weight != sum(ch.weight for ch in u.children):
                out.append("internal weight differs from children sum")
        for i, ch in enumerate(u.children):
            if ch.sibnum != i:
                out.append("sibnum does not match child position")
            if ch.parent is not u:
                out.append("child does not know its parent")
        # copy list: order, membership, minima
        cells = []
        cell = u.head
        while cell is not None:
            cells.append(cell)
            cell = cell.next
        if [c.leaf for c in cells] != leaves:
            out.append("copy list order differs from leaf order")
        pv, pe = None, None
        for c in cells:
            v, e = c.leaf.minv, c.leaf.mine
            if pv is None or v < pv:
                pv, pe = v, e
            if c.pv != pv or c.pe is not pe:
                out.append("prefix minimum mismatch in copy list")
        qv, qe = None, None
        for c in reversed(cells):
            v, e = c.leaf.minv, c.leaf.mine
            if qv is None or v <= qv:
                qv, qe = v, e
            if c.qv != qv or c.qe is not qe:
                out.append("suffix minimum mismatch in copy list")
        for leaf in leaves:
            if leaf.ancestors[u.level - 1] is not u:
                out.append("ancestor array does not contain this node")
            c = leaf.clones[u.level - 1]
            if c.leaf is not leaf:
                out.append("clone does not resolve to its leaf")
            expect = 0
            node = leaf
            for l in range(len(leaf.ancestors)):
                expect |= node.sibnum << (l * self.cb)
                node = leaf.ancestors[l]
            if leaf.pathstring != expect:
                out.append("pathstring does not match the tree shape")
        if u.level > 1:
            for ch in u.children:
                self._validate_main(ch, out)
