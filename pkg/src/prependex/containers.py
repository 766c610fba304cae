"""Comparison-driven ordered containers and the sorted string set over them.

The containers never look at keys: every ordering fact reaches them through a
comparator.  Insertion reports the new slot's in-order neighbors, which is the
one structural requirement the string-set transformation needs.  Two
interchangeable implementations are provided, a height-balanced tree and a
randomized treap, so client code can demonstrate independence from the backing
structure.

``StringSet`` wires them to a DS+LCP list: stored-vs-stored comparisons become
O(1) list order queries, external-vs-stored comparisons run through a fly
session, and the neighbor lcp values required by the list insert come from the
session (with a bounded rescan fallback).
"""

from __future__ import annotations

import random

from .dslcp_list import LESS, EQUAL, GREATER, DsLcpList
from .fly_compare import FlySession
from .text_store import StringView

FOUND = "found"
BETWEEN = "between"


class _Slot:
    __slots__ = ("item", "left", "right", "height", "prio")

    def __init__(self, item, prio=0):
        self.item = item
        self.left = None
        self.right = None
        self.height = 1
        self.prio = prio


class AvlContainer:
    """Height-balanced search tree driven entirely by comparators.

    ``order`` compares two stored items in O(1); ``slot_moved`` is invoked
    when a deletion relocates an item to a different slot.
    """

    def __init__(self, order, slot_moved=None):
        self.order = order
        self.slot_moved = slot_moved
        self.root = None
        self.size = 0
        self.steps = 0

    # -- queries -------------------------------------------------------------

    def search_with(self, cmp):
        """Locate an external key: cmp(item) orders it against a stored item."""
        cur = self.root
        pred = succ = None
        while cur is not None:
            self.steps += 1
            o = cmp(cur.item)
            if o == EQUAL:
                return FOUND, cur, None
            if o == LESS:
                succ = cur
                cur = cur.left
            else:
                pred = cur
                cur = cur.right
        return BETWEEN, pred, succ

    def items_in_order(self):
        out = []
        stack = []
        cur = self.root
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            out.append(cur.item)
            cur = cur.right
        return out

    # -- updates --------------------------------------------------------------

    def insert_with(self, item, cmp):
        """Insert; returns (slot, pred_slot, succ_slot) by in-order position."""
        node = _Slot(item)
        self.size += 1
        if self.root is None:
            self.root = node
            return node, None, None
        path = []
        append = path.append
        cur = self.root
        pred = succ = None
        went_left = False
        n = 0
        while cur is not None:
            append(cur)
            if cmp(cur.item) == LESS:
                succ = cur
                cur = cur.left
                went_left = True
            else:
                pred = cur
                cur = cur.right
                went_left = False
            n += 1
        self.steps += n
        if went_left:
            path[-1].left = node
        else:
            path[-1].right = node
        self._retrace(path)
        return node, pred, succ

    def delete(self, slot) -> None:
        """Remove a slot located by O(1) order comparisons on stored items."""
        path = []
        lefts = []
        cur = self.root
        order = self.order
        target = slot.item
        while cur is not slot:
            self.steps += 1
            path.append(cur)
            if order(target, cur.item) == LESS:
                lefts.append(True)
                cur = cur.left
            else:
                lefts.append(False)
                cur = cur.right
        if cur.left is not None and cur.right is not None:
            # swap payload with the in-order successor, delete that slot
            path.append(cur)
            lefts.append(False)
            succ = cur.right
            while succ.left is not None:
                path.append(succ)
                lefts.append(True)
                succ = succ.left
                self.steps += 1
            cur.item = succ.item
            if self.slot_moved is not None:
                self.slot_moved(cur.item, cur)
            cur = succ
        child = cur.left if cur.left is not None else cur.right
        if not path:
            self.root = child
        elif lefts[-1]:
            path[-1].left = child
        else:
            path[-1].right = child
        self.size -= 1
        self._retrace(path)

    # -- balancing ------------------------------------------------------------

    def _retrace(self, path) -> None:
        for i in range(len(path) - 1, -1, -1):
            n = path[i]
            l, r = n.left, n.right
            lh = l.height if l is not None else 0
            rh = r.height if r is not None else 0
            h = (lh if lh > rh else rh) + 1
            bal = lh - rh
            if -1 <= bal <= 1:
                if h == n.height:
                    return
                n.height = h
                continue
            self.steps += 1
            if bal > 1:
                c = n.left
                if (c.right.height if c.right is not None else 0) > \
                        (c.left.height if c.left is not None else 0):
                    n.left = self._rot_left(c)
                sub = self._rot_right(n)
            else:
                c = n.right
                if (c.left.height if c.left is not None else 0) > \
                        (c.right.height if c.right is not None else 0):
                    n.right = self._rot_right(c)
                sub = self._rot_left(n)
            if i == 0:
                self.root = sub
            else:
                p = path[i - 1]
                if p.left is n:
                    p.left = sub
                else:
                    p.right = sub

    @staticmethod
    def _fix(n) -> None:
        l, r = n.left, n.right
        lh = l.height if l is not None else 0
        rh = r.height if r is not None else 0
        n.height = (lh if lh > rh else rh) + 1

    @classmethod
    def _rot_left(cls, n):
        r = n.right
        n.right = r.left
        r.left = n
        cls._fix(n)
        cls._fix(r)
        return r

    @classmethod
    def _rot_right(cls, n):
        l = n.left
        n.left = l.right
        l.right = n
        cls._fix(n)
        cls._fix(l)
        return l

    def check_balanced(self) -> bool:
        def walk(n):
            if n is None:
                return 0
            lh, rh = walk(n.left), walk(n.right)
            assert abs(lh - rh) <= 1 and n.height == max(lh, rh) + 1
            return n.height
        walk(self.root)
        return True


class TreapContainer:
    """Randomized treap with the same comparator-driven interface."""

    def __init__(self, order, slot_moved=None, seed=0x5eed):
        self.order = order
        self.slot_moved = slot_moved
        self.root = None
        self.size = 0
        self.steps = 0
        self._rng = random.Random(seed)

    search_with = AvlContainer.search_with
    items_in_order = AvlContainer.items_in_order

    def insert_with(self, item, cmp):
        node = _Slot(item, self._rng.random())
        self.size += 1
        path = []
        lefts = []
        cur = self.root
        pred = succ = None
        while cur is not None:
            self.steps += 1
            path.append(cur)
            if cmp(cur.item) == LESS:
                succ = cur
                lefts.append(True)
                cur = cur.left
            else:
                pred = cur
                lefts.append(False)
                cur = cur.right
        # attach, then rotate up while the heap order is violated
        while path and path[-1].prio > node.prio:
            p = path.pop()
            if lefts.pop():
                p.left = node.right
                node.right = p
            else:
                p.right = node.left
                node.left = p
            self.steps += 1
        if not path:
            self.root = node
        elif lefts[-1]:
            path[-1].left = node
        else:
            path[-1].right = node
        return node, pred, succ

    def delete(self, slot) -> None:
        path = []
        cur = self.root
        order = self.order
        target = slot.item
        parent = None
        while cur is not slot:
            self.steps += 1
            parent = cur
            cur = cur.left if order(target, cur.item) == LESS else cur.right

        def replace(new):
            if parent is None:
                self.root = new
            elif parent.left is cur:
                parent.left = new
            else:
                parent.right = new

        while cur.left is not None and cur.right is not None:
            self.steps += 1
            if cur.left.prio < cur.right.prio:
                sub = self._rot_right_local(cur)
            else:
                sub = self._rot_left_local(cur)
            replace(sub)
            parent = sub
        replace(cur.left if cur.left is not None else cur.right)
        self.size -= 1

    @staticmethod
    def _rot_right_local(n):
        l = n.left
        n.left = l.right
        l.right = n
        return l

    @staticmethod
    def _rot_left_local(n):
        r = n.right
        n.right = r.left
        r.left = n
        return r


CONTAINER_KINDS = {"avl": AvlContainer, "treap": TreapContainer}


class SetItem:
    """One stored string: its view, list handle and container slot."""

    __slots__ = ("view", "handle", "slot")

    def __init__(self, view):
        self.view = view
        self.handle = None
        self.slot = None


class StringSet:
    """Sorted set of strings backed by any comparator-driven container."""

    def __init__(self, container="avl", b=8, capacity=0):
        self.list = DsLcpList(b=b, capacity=capacity)
        factory = CONTAINER_KINDS[container] if isinstance(container, str) else container
        self.container = factory(self._order_items, self._slot_moved)

    def _order_items(self, a: SetItem, b: SetItem):
        return self.list.order(a.handle, b.handle)

    def _slot_moved(self, item: SetItem, slot) -> None:
        item.slot = slot

    def __len__(self):
        return len(self.list)

    def insert_string(self, view: StringView):
        """Insert a string; returns its list handle.  Cost O(T(n) + |y|)."""
        item = SetItem(view)
        sess = FlySession(self.list, view)
        last = {}

        def cmp(stored: SetItem):
            o, lcp = sess.compare(stored.handle, stored.view)
            last[o] = (stored, lcp)
            return o

        slot, pred_slot, succ_slot = self.container.insert_with(item, cmp)
        item.slot = slot
        pred = pred_slot.item if pred_slot is not None else None
        succ = succ_slot.item if succ_slot is not None else None
        lcp_pred = self._neighbor_lcp(pred, last.get(GREATER), view)
        lcp_succ = self._neighbor_lcp(succ, last.get(LESS), view)
        item.handle = self.list.insert(
            pred.handle if pred is not None else None,
            succ.handle if succ is not None else None,
            lcp_pred, lcp_succ, view.length)
        item.handle.user_data = item
        return item.handle

    def _neighbor_lcp(self, neighbor, memo, view):
        if neighbor is None:
            return None
        if memo is not None and memo[0] is neighbor:
            lcp = memo[1]
        else:
            # neighbor never compared on the way down: one bounded rescan
            lcp = 0
            nview = neighbor.view
            limit = min(view.length, nview.length) - 1
            while lcp < limit and view.symbol_at(lcp + 1) == nview.symbol_at(lcp + 1):
                lcp += 1
        if lcp == view.length - 1 and neighbor.view.length == view.length:
            return lcp + 1  # equal strings share their endmarker too
        return lcp

    def search(self, view: StringView):
        """FOUND with the handle, or BETWEEN the neighboring handles."""
        sess = FlySession(self.list, view)
        last = {}

        def cmp(stored: SetItem):
            o, lcp = sess.compare(stored.handle, stored.view)
            last[o] = (stored, lcp)
            return o

        kind, a, b = self.container.search_with(cmp)
        if kind == FOUND:  # not reachable with prefix-precedes ordering
            return FOUND, a.item.handle, None
        pred = a.item if a is not None else None
        succ = b.item if b is not None else None
        if succ is not None:
            memo = last.get(LESS)
            if memo is not None and memo[0] is succ and \
                    memo[1] == view.length - 1 and succ.view.length == view.length:
                return FOUND, succ.handle, None
        return (BETWEEN,
                pred.handle if pred is not None else None,
                succ.handle if succ is not None else None)

    def remove_string(self, handle) -> None:
        item = handle.user_data
        self.container.delete(item.slot)
        self.list.remove(handle)

    def handles_in_order(self):
        return list(self.list.iter_handles())

    def items_in_container_order(self):
        return self.container.items_in_order()
