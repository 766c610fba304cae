"""Comparing an external string against stored strings without rescans.

A session tracks the stored string with the best lcp against the query seen so
far (``bestfriend``/``bestlcp``).  Each comparison first asks the list for the
lcp between the best friend and the new stored string; only when that value
reaches ``bestlcp`` can the query match extend, and extensions over a whole
session telescope, so total character work over g comparisons is O(g + |y|).
"""

from __future__ import annotations

from .dslcp_list import LESS, EQUAL, GREATER, DsLcpList, ListHandle
from .text_store import StringView


class FlySession:
    """State for comparing one query string against members of one list."""

    __slots__ = ("lst", "view", "bestfriend", "bestlcp",
                 "char_cmp_count", "call_count")

    def __init__(self, lst: DsLcpList, view: StringView):
        self.lst = lst
        self.view = view
        self.bestfriend: ListHandle | None = None  # None encodes the empty string
        self.bestlcp = 0
        self.char_cmp_count = 0
        self.call_count = 0

    def compare(self, x: ListHandle, text_of_x: StringView):
        """(ordering of the query relative to x, lcp(query, x)).

        A query that is a proper prefix of ``x`` (including the exact
        user-symbol match against a stored string) orders as LESS, which makes
        the query's successor the first candidate occurrence.
        """
        self.call_count += 1
        best = self.bestfriend
        m = 0 if best is None else self.lst.lcp(best, x)
        y = self.view
        bestlcp = self.bestlcp
        if m >= bestlcp:
            m = bestlcp
            limit_x = text_of_x.length
            limit_y = y.length
            probes = 0
            while True:
                cx = text_of_x.symbol_at(m + 1) if m + 1 <= limit_x else 0
                cy = y.symbol_at(m + 1) if m + 1 <= limit_y else 0
                probes += 1
                if cx != cy or cy == 0:
                    break
                m += 1
            self.char_cmp_count += probes
            self.bestfriend = x
            self.bestlcp = m
            if cx == cy:
                # both exhausted together: the query is a prefix of x
                return LESS, m
            return (LESS if cy < cx else GREATER), m
        # m < bestlcp: the mismatch is already known from the list
        cx = text_of_x.symbol_at(m + 1) if m + 1 <= text_of_x.length else 0
        cy = y.symbol_at(m + 1)
        self.char_cmp_count += 1
        return (LESS if cy < cx else GREATER), m

    def known_lcp(self, x: ListHandle):
        """lcp with ``x`` if this session already determined it, else None."""
        if x is self.bestfriend:
            return self.bestlcp
        return None
