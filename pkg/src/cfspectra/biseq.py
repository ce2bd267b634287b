"""Bi-infinite eventually periodic {1,2}-sequences, lambda values, Markov values."""

from __future__ import annotations

from dataclasses import dataclass

from .cf import cf_matrix, apply_moebius, eventually_periodic_value
from .errors import DomainError
from .surd import SurdSum
from .words import Word


def _rotate(s, k):
    k %= len(s)
    return s[k:] + s[:k]


@dataclass(frozen=True)
class BiSeq:
    """...(left_period)^inf left_transient | right_transient (right_period)^inf...

    Position 0 is the first digit of right_transient (of right_period when the
    transient is empty); position -1 is the last digit of left_transient.
    """

    left_period: Word
    left_transient: Word
    right_transient: Word
    right_period: Word

    def __post_init__(self):
        if not self.left_period or not self.right_period:
            raise DomainError("both periods must be nonempty")

    @classmethod
    def make(cls, left_period, left_transient="", right_transient="", right_period=None):
        if right_period is None:
            right_period = left_period
        return cls(Word(str(left_period)), Word(str(left_transient)),
                   Word(str(right_transient)), Word(str(right_period)))

    @classmethod
    def periodic(cls, period):
        p = Word(str(period))
        return cls(p, Word(""), Word(""), p)

    def digit(self, i):
        tr, tl = self.right_transient.digits, self.left_transient.digits
        if i >= 0:
            if i < len(tr):
                return tr[i]
            return self.right_period.digits[(i - len(tr)) % len(self.right_period)]
        j = -1 - i  # offset from the right end of the left side
        if j < len(tl):
            return tl[len(tl) - 1 - j]
        lp = self.left_period.digits
        return lp[len(lp) - 1 - (j - len(tl)) % len(lp)]

    def segment(self, lo, hi):
        """Digits at positions lo..hi-1 as a plain string."""
        return "".join(self.digit(i) for i in range(lo, hi))

    def shift(self, k):
        """Sequence t with t_i = s_{i+k}; the resulting value is equivalent."""
        if k == 0:
            return self
        tr, tl = self.right_transient.digits, self.left_transient.digits
        rp, lp = self.right_period.digits, self.left_period.digits
        if k > 0:
            new_tl = tl + self.segment(0, k)
            if k < len(tr):
                return BiSeq(self.left_period, Word(new_tl), Word(tr[k:]), self.right_period)
            rot = (k - len(tr)) % len(rp)
            return BiSeq(self.left_period, Word(new_tl), Word(""), Word(_rotate(rp, rot)))
        j = -k
        new_tr = self.segment(-j, 0) + tr
        if j <= len(tl):
            return BiSeq(self.left_period, Word(tl[: len(tl) - j]), Word(new_tr), self.right_period)
        rot = (j - len(tl)) % len(lp)
        return BiSeq(Word(_rotate(lp, len(lp) - rot)), Word(""), Word(new_tr), self.right_period)

    def transpose(self):
        """Mirror the sequence about the origin (position i maps to -1-i)."""
        return BiSeq(Word(self.right_period.digits[::-1]),
                     Word(self.right_transient.digits[::-1]),
                     Word(self.left_transient.digits[::-1]),
                     Word(self.left_period.digits[::-1]))

    def _tail0(self, i):
        """[0; s_i, s_{i+1}, ...] as an exact QuadSurd."""
        tr = self.right_transient.digits
        rp = self.right_period.digits
        if i >= len(tr):
            rot = (i - len(tr)) % len(rp)
            return eventually_periodic_value("", _rotate(rp, rot))
        head = self.segment(i, len(tr))
        return eventually_periodic_value(head, rp)

    def forward_value(self, i):
        """[s_i; s_{i+1}, ...] exactly."""
        d = int(self.digit(i))
        nxt = self.shift(i + 1) if i + 1 != 0 else self
        return nxt._tail0(0) + d

    def backward_value(self, i):
        """[0; s_{i-1}, s_{i-2}, ...] exactly."""
        return self.transpose()._tail0(-i)

    def __repr__(self):
        return "BiSeq(per(%s) %s | %s per(%s))" % (
            self.left_period, self.left_transient, self.right_transient, self.right_period)


def lambda_at(s, i):
    """lambda at position i: [s_i; s_{i+1}, ...] + [0; s_{i-1}, s_{i-2}, ...]."""
    return SurdSum.from_value(s.forward_value(i)) + s.backward_value(i)


def _phase_sup(s, i0, step):
    """Exact sup over k >= 0 of lambda_at(s, i0 + k*step) for positions in the
    right periodic region, where step = |right_period|.

    Returns (value, attained_index_or_None).  The forward parts of all these
    positions coincide; the backward values form a Moebius orbit, which is
    monotone when step is even and alternating when odd, so the sup is one of
    {v0, v1, limit}.
    """
    v0 = lambda_at(s, i0)
    v1 = lambda_at(s, i0 + step)
    lim_seq = BiSeq.periodic(s.right_period)
    lim = lambda_at(lim_seq, (i0 - len(s.right_transient)) % step)
    if step % 2 == 0:
        c = (v0 - v1).sign()
        if c >= 0:  # non-increasing orbit: first term is the sup
            return v0, i0
        return lim, None  # increasing toward the periodic limit, never attained
    # odd period: the two parity subsequences approach the limit from opposite
    # sides, so the sup is max(v0, v1) and it is attained
    if (v0 - v1).sign() >= 0:
        return v0, i0
    return v1, i0 + step


_UNSET = object()


def _markov_periodic(period):
    """Exact Markov value of the two-sided periodic sequence, in O(|period|)
    field operations: the forward tails x and backward values y at successive
    phases obey x' = 1/x - d and y' = 1/(d + y), all inside one quadratic
    field (the reversed period matrix is the transpose, so the discriminants
    agree)."""
    from .cf import eventually_periodic_value
    p = str(period)
    n = len(p)
    xs = [eventually_periodic_value("", p)]
    for ch in p[:-1]:
        xs.append(1 / xs[-1] - int(ch))
    ys = [eventually_periodic_value("", p[::-1])]
    for ch in p[:-1]:
        ys.append(1 / (int(ch) + ys[-1]))
    # ys[phi] is [0; p[phi-1], p[phi-2], ...]: the backward value at phase phi
    best = None
    best_i = 0
    for i in range(n):
        lam = xs[(i + 1) % n] + int(p[i]) + ys[i]
        if best is None or (lam - best).sign() > 0:
            best, best_i = lam, i
    return SurdSum.from_value(best), True, best_i


def markov_value(s, window=None):
    """sup over i of lambda_at(s, i), exactly.

    Returns (value, attained, index): attained is True when the sup is
    achieved at a finite position (index reports one such position), else the
    value is the periodic-limit sup and index is None.
    """
    if (not s.left_transient and not s.right_transient
            and s.left_period.digits == s.right_period.digits):
        return _markov_periodic(s.right_period)
    nl, nr = len(s.left_period), len(s.right_period)
    lo = -(len(s.left_transient) + 2 * nl + 2)
    hi = len(s.right_transient) + 2 * nr + 2
    if window is not None:
        lo, hi = min(lo, -window), max(hi, window)

    candidates = []  # (value, attained, index)
    for i in range(lo, hi):
        candidates.append((lambda_at(s, i), True, i))

    # far right: one orbit per phase of the right period
    base = len(s.right_transient)
    for phi in range(nr):
        i0 = hi + ((base + phi - hi) % nr)
        val, idx = _phase_sup(s, i0, nr)
        candidates.append((val, idx is not None, idx))
    # far left via the mirror (position i of the transpose is -1-i here)
    t = s.transpose()
    tbase = len(t.right_transient)
    thi = len(t.right_transient) + 2 * nl + 2
    if window is not None:
        thi = max(thi, window)
    for phi in range(nl):
        i0 = thi + ((tbase + phi - thi) % nl)
        val, idx = _phase_sup(t, i0, nl)
        candidates.append((val, idx is not None, -1 - idx if idx is not None else None))

    best = _UNSET
    for val, att, idx in candidates:
        if best is _UNSET:
            best = (val, att, idx)
            continue
        c = (val - best[0]).sign()
        if c > 0 or (c == 0 and att and not best[1]):
            best = (val, att, idx)
    value, attained, index = best
    return value, attained, (index if attained else None)
