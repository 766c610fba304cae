"""All suffixes of the growing text, sorted, with O(1) suffix comparisons.

Suffixes enter in increasing length order (the text grows by prepending), so
when the new suffix aT meets a stored suffix x the comparison is free of
rescans: either their first characters differ, or x = az and
lcp(aT, x) = lcp(T, z) + 1 where both T and z are already in the list and one
list query answers it.  The record of each suffix keeps its list handle and
container slot; the suffix link is implicit because records are indexed by
length.

This module gives suffix insertion in O(T(n)) container comparisons, LIFO
deletion, suffix-array dumps by one list walk, and located pattern occurrences
as a run of list neighbors.
"""

from __future__ import annotations

from .containers import BETWEEN, CONTAINER_KINDS, FOUND
from .dslcp_list import DsLcpList, LESS, GREATER
from .fly_compare import FlySession
from .text_store import PatternView, StringView, SuffixView, TextBuffer, TextUnderflow


class SuffixRecord:
    """Ties one suffix (by length) to its handle, slot and tree leaf."""

    __slots__ = ("length", "handle", "slot", "leaf")

    def __init__(self, length):
        self.length = length
        self.handle = None
        self.slot = None
        self.leaf = None


class SuffixIndex:
    """Sorted index over the suffixes of a prepend-only text."""

    def __init__(self, container="avl", b=8, capacity=0):
        self.text = TextBuffer()
        self.list = DsLcpList(b=b, capacity=capacity)
        factory = CONTAINER_KINDS[container] if isinstance(container, str) else container
        self.container = factory(self._order_records, self._slot_moved)
        self.records = [SuffixRecord(0)]  # the empty string; never listed
        root = SuffixRecord(1)            # the sentinel suffix
        root.handle = self.list.insert(None, None, None, None, 1)
        root.handle.user_data = root
        root.slot, _, _ = self.container.insert_with(root, lambda _: GREATER)
        self.records.append(root)

    def _order_records(self, a: SuffixRecord, b: SuffixRecord):
        return self.list.order(a.handle, b.handle)

    def _slot_moved(self, rec: SuffixRecord, slot) -> None:
        rec.slot = slot

    @property
    def user_len(self) -> int:
        return len(self.records) - 2

    def slink(self, rec: SuffixRecord) -> SuffixRecord:
        """Record of the suffix one character shorter."""
        return self.records[rec.length - 1]

    def record_of(self, handle) -> SuffixRecord:
        return handle.user_data

    # -- updates ---------------------------------------------------------------

    def push_front(self, a: int, entry_hook=None):
        """Prepend symbol ``a`` and index the new longest suffix.

        ``entry_hook(new_rec, pred, succ, lcp_pred, lcp_succ)`` runs after the
        container placement but before the list insert (the suffix tree finds
        its entry point there); it returns the two witness payloads.
        Returns (record, pred_handle, succ_handle, lcp_pred, lcp_succ).
        """
        if a < 1:
            raise ValueError("user symbols must have code >= 1")
        text = self.text
        text.prepend(a)
        cells = text.cells
        length = len(cells)
        records = self.records
        t_handle = records[-1].handle         # the previous whole text
        lst = self.list
        new_rec = SuffixRecord(length)

        t_entry = t_handle.right_entry
        t_node = t_entry.node
        t_bucket = t_node.bucket
        t_path = t_bucket.main_left.pathstring
        order_calls = 0

        def cmp(r: SuffixRecord):
            # order the new suffix aT against stored suffix x in O(1): on a
            # first-symbol tie x = az and aT vs az orders exactly as T vs z,
            # which the sorted list answers by position (inlined here)
            first = cells[r.length - 1]
            if first != a:
                return LESS if a < first else GREATER
            nonlocal order_calls
            order_calls += 1
            ze = records[r.length - 1].handle.right_entry
            zb = ze.node.bucket
            if zb is not t_bucket:
                return LESS if t_path < zb.main_left.pathstring else GREATER
            return lst._entry_order(t_entry, ze)

        container = self.container
        steps0 = container.steps
        slot, pred_slot, succ_slot = container.insert_with(new_rec, cmp)
        text.reads += 2 * (container.steps - steps0)
        lst.probes += order_calls
        new_rec.slot = slot
        if pred_slot is None and succ_slot is None:
            raise AssertionError("sentinel suffix must already be present")
        pred = pred_slot.item if pred_slot is not None else None
        succ = succ_slot.item if succ_slot is not None else None
        lcp_pred = self._suffix_lcp(a, length, pred)
        lcp_succ = self._suffix_lcp(a, length, succ) if succ is not None else None
        wp = ws = None
        if entry_hook is not None:
            wp, ws = entry_hook(new_rec, pred, succ, lcp_pred, lcp_succ)
        new_rec.handle = self.list.insert(
            pred.handle, succ.handle if succ is not None else None,
            lcp_pred, lcp_succ, length, wp, ws)
        new_rec.handle.user_data = new_rec
        records.append(new_rec)
        return (new_rec, pred.handle,
                succ.handle if succ is not None else None, lcp_pred, lcp_succ)

    def _suffix_lcp(self, a: int, length: int, r: SuffixRecord) -> int:
        """lcp of the new suffix (first symbol ``a``) with stored suffix r."""
        cells = self.text.cells
        first = cells[r.length - 1]
        self.text.reads += 1
        if first != a:
            return 0
        t_handle = self.records[length - 1].handle
        return self.list.lcp(t_handle, self.records[r.length - 1].handle) + 1

    def pop_front(self) -> None:
        """Drop the longest suffix (LIFO inverse of push_front)."""
        if len(self.records) <= 2:
            raise TextUnderflow("no user symbols to remove")
        rec = self.records.pop()
        self.container.delete(rec.slot)
        self.list.remove(rec.handle)
        self.text.pop_front()

    # -- queries -----------------------------------------------------------------

    def locate(self, pattern: StringView):
        """(count, ascending 0-based occurrence positions) of the pattern."""
        m = pattern.length - 1
        n = self.user_len
        if m == 0:
            return n + 1, list(range(n + 1))
        sess = FlySession(self.list, pattern)

        def cmp(r: SuffixRecord):
            o, _ = sess.compare(r.handle, SuffixView(self.text, r.length))
            return o

        kind, a, b = self.container.search_with(cmp)
        if kind == FOUND:
            first = a.item
        else:
            first = b.item if b is not None else None
        if first is None:
            return 0, []
        _, lcp = sess.compare(first.handle, SuffixView(self.text, first.length))
        if lcp < m:
            return 0, []
        positions = []
        lst = self.list
        h = first.handle
        while h is not None:
            rec = h.user_data
            positions.append(n - (rec.length - 1))
            al = lst.adjacent_lcp(h)
            if al is None or al < m:
                break
            h = h.next
        positions.sort()
        return len(positions), positions

    def dump_suffix_array(self):
        """(SA, LCP) of the current text by one list walk; O(n)."""
        n = self.user_len
        sa = []
        lcp = []
        h = self.list.head
        while h is not None:
            sa.append(n - (h.user_data.length - 1))
            if h.next is not None:
                lcp.append(h.right_entry.value)
            h = h.next
        return sa, lcp


def suffix_sort(codes, container="avl", b=8):
    """Feed a whole string right to left; return its (SA, LCP).

    Total time O(n + sum of container insert costs) = O(n log n) with the
    balanced-tree container.  Cyclic garbage collection is suspended for the
    bulk load (the structures are strongly referenced throughout).
    """
    import gc
    idx = SuffixIndex(container=container, b=b, capacity=len(codes) + 2)
    push = idx.push_front
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for c in reversed(codes):
            push(c)
    finally:
        if was_enabled:
            gc.enable()
    return idx.dump_suffix_array()


def pattern_from_bytes(data: bytes) -> PatternView:
    return PatternView.from_bytes(data)
