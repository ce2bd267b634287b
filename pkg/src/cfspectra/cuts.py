"""Good/bad cut classification, cut push-forwards, and forbidden patterns."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .biseq import BiSeq, lambda_at
from .cf import extremal_tail
from .errors import DomainError, PreconditionUnverified, TemplateMismatch
from .surd import SurdSum
from .words import ABWord, UVWord, Word, apply_subst

THREE = Fraction(3)


@dataclass(frozen=True)
class Cut:
    """A finite word with a marked bar: context_left | context_right."""

    left: Word
    right: Word

    def __post_init__(self):
        if not self.left or not self.right:
            raise DomainError("both sides of a cut must be nonempty")

    @property
    def word(self):
        return self.left + self.right

    def __str__(self):
        return "%s|%s" % (self.left, self.right)

    @classmethod
    def parse(cls, text):
        l, _, r = text.partition("|")
        return cls(Word(l), Word(r))


def position_bounds(word, i):
    """(min, max) of lambda at position i of a finite word, over all bi-infinite
    completions; exact values attained by the alternating extremal tails."""
    s = str(word)
    d = int(s[i])
    _, fmax = extremal_tail(s[i + 1:], "max")
    _, fmin = extremal_tail(s[i + 1:], "min")
    back = s[:i][::-1]
    _, bmax = extremal_tail(back, "max")
    _, bmin = extremal_tail(back, "min")
    return d + fmin + bmin, d + fmax + bmax


@dataclass(frozen=True)
class CutClass:
    kind: str  # good | bad | mixed | unresolved
    sup_left: SurdSum
    sup_right: SurdSum
    depth: int | None = None

    def __str__(self):
        return self.kind if self.depth is None else "%s(depth=%d)" % (self.kind, self.depth)


def _lambda_pair(left_period, lext, body, rext, right_period, pos_l, pos_r):
    seq = BiSeq.make(left_period, "", lext + body + rext, right_period)
    off = len(lext)
    return lambda_at(seq, off + pos_l), lambda_at(seq, off + pos_r)


def classify_cut(cut, max_depth=14):
    """Exact classification of the two bar-adjacent positions.

    good: lambda < 3 at both positions for every completion (exact suprema via
    extremal tails).  bad: every completion has lambda > 3 at one of the two
    positions (branch-and-bound over extension digits).  mixed: neither.
    """
    s = str(cut.word)
    m = len(cut.left)
    pos_l, pos_r = m - 1, m
    _, sup_l = position_bounds(s, pos_l)
    _, sup_r = position_bounds(s, pos_r)
    sup_l, sup_r = SurdSum.from_value(sup_l), SurdSum.from_value(sup_r)
    if sup_l < THREE and sup_r < THREE:
        return CutClass("good", sup_l, sup_r)

    periods = ("12", "21")
    stack = [("", "")]
    capped = False
    while stack:
        lext, rext = stack.pop()
        w = lext + s + rext
        pl, pr = len(lext) + pos_l, len(lext) + pos_r
        min_l, _ = position_bounds(w, pl)
        min_r, _ = position_bounds(w, pr)
        if min_l > THREE or min_r > THREE:
            continue  # every completion of this branch exceeds 3 here
        for lp in periods:
            for rp in periods:
                vl, vr = _lambda_pair(lp, lext, s, rext, rp, pos_l, pos_r)
                if vl <= THREE and vr <= THREE:
                    return CutClass("mixed", sup_l, sup_r,
                                    depth=len(lext) + len(rext))
        if len(lext) + len(rext) >= max_depth:
            capped = True
            continue
        if len(lext) <= len(rext):
            stack.extend([("1" + lext, rext), ("2" + lext, rext)])
        else:
            stack.extend([(lext, rext + "1"), (lext, rext + "2")])
    if capped:
        return CutClass("unresolved", sup_l, sup_r, depth=max_depth)
    return CutClass("bad", sup_l, sup_r)


_KINDS = ("good-symmetric", "good-asymmetric", "bad-symmetric", "bad-asymmetric")


def _ab(side):
    try:
        return ABWord.from_word(side)
    except ValueError as e:
        raise TemplateMismatch("cut sides must be {a,b}-words: %s" % e)


def push_cut(w_uv, cut, kind):
    """Push a template cut through a {U,V}-substitution word.

    Templates (with w an {a,b}-word, X and Y context words):
      bad-asymmetric   X b w* b | a w a Y   ->  b u+ W(w*) v- b | a u+ W(w) v- a
      bad-symmetric    a w* a | b w b       ->  a u+ W(w*) v- a | b u+ W(w) v- b
      good-asymmetric  X b w* a | b w a Y   ->  b u+ W(w*) v- a | b u+ W(w) v- a
      good-symmetric   a w* b | a w b       ->  a u+ W(w*) v- b | a u+ W(w) v- b
    where u = W(a), v = W(b); asymmetric kinds require |W(X)| >= |u| and
    |W(Y)| >= |v| (digit lengths).
    """
    if kind not in _KINDS:
        raise DomainError("unknown kind %r" % kind)
    W = UVWord(str(w_uv))
    if len(W) == 0:
        return cut
    left, right = _ab(cut.left), _ab(cut.right)
    u, v = apply_subst(W, ABWord("a")), apply_subst(W, ABWord("b"))
    up, vm = u.head(), v.body()

    def image(x):
        return apply_subst(W, x)

    if kind.endswith("symmetric") and not kind.endswith("asymmetric"):
        la, lb = ("a", "a") if kind == "bad-symmetric" else ("a", "b")
        ra, rb = ("b", "b") if kind == "bad-symmetric" else ("a", "b")
        ls, rs = left.letters, right.letters
        if len(ls) != len(rs) or len(ls) < 2:
            raise TemplateMismatch("symmetric template needs equal sides")
        if not (ls[0] == la and ls[-1] == lb and rs[0] == ra and rs[-1] == rb):
            raise TemplateMismatch("sides do not match the %s template" % kind)
        w = ABWord(rs[1:-1])
        if ls[1:-1] != w.transpose().letters:
            raise TemplateMismatch("left interior is not the transposed right interior")
        mid_t = (up + image(w.transpose()) + vm).letters
        mid = (up + image(w) + vm).letters
        new_left = ABWord(la + mid_t + lb)
        new_right = ABWord(ra + mid + rb)
        return Cut(new_left.to_word(), new_right.to_word())

    # asymmetric kinds: scan for the maximal interior word w
    bad = kind == "bad-asymmetric"
    ls, rs = left.letters, right.letters
    best = None
    for k in range(min(len(ls), len(rs)) - 1, -1, -1):
        # right side: a w a Y (bad) or b w a Y (good); left: X b w* b / X b w* a
        w = rs[1:1 + k]
        lworld = ls[: len(ls) - (k + 2)]
        l_tmpl = ("b" + w[::-1] + ("b" if bad else "a"))
        if not ls.endswith(l_tmpl):
            continue
        if rs[0] != ("a" if bad else "b") or len(rs) < k + 2 or rs[k + 1] != "a":
            continue
        X, Y = ABWord(lworld), ABWord(rs[k + 2:])
        if 2 * len(image(X)) < 2 * len(u) or 2 * len(image(Y)) < 2 * len(v):
            continue
        best = ABWord(w)
        break
    if best is None:
        raise TemplateMismatch("cut does not contain the %s template" % kind)
    w = best
    mid_t = (up + image(w.transpose()) + vm).letters
    mid = (up + image(w) + vm).letters
    if bad:
        new_left = ABWord("b" + mid_t + "b")
        new_right = ABWord("a" + mid + "a")
    else:
        new_left = ABWord("b" + mid_t + "a")
        new_right = ABWord("b" + mid + "a")
    return Cut(new_left.to_word(), new_right.to_word())


@dataclass(frozen=True)
class CompareVerdict:
    ok: bool
    base_bound: SurdSum    # exact sup of lambda over cuts built on the base word
    extended_bound: SurdSum
    threshold: object


def _cut_sup(omega, x):
    """Exact sup over completions of 3 + [0;11 omega x ...] - inf [0;11 omega y ...],
    the lambda value at the cut a omega y of ... x omega* b | a omega y ..."""
    o = str(omega)
    up = "11" + o + x
    _, hi = extremal_tail(up, "max")
    y = "1" if x == "2" else "2"
    dn = "11" + o + y
    _, lo = extremal_tail(dn, "min")
    return SurdSum.from_value(hi) + THREE - lo


def compare_bad_cuts(omega, omega_tilde, t, x="1", witness=None):
    """Certify that every sequence ... x omega_tilde* b | a omega_tilde y ... has
    lambda below t, given that the base bad cut x omega* b | a omega y occurs in
    a word of the t-level language.

    The precondition is certified by a caller-supplied witness sequence whose
    Markov value is <= t and which contains the base cut; without one, the
    extremal periodic closings of the base pattern are tried as witnesses.
    Returns the exact bound chain.
    """
    o, ot = str(omega), str(omega_tilde)
    if not ot.startswith(o):
        raise DomainError("extended word must begin with the base word")
    if x not in ("1", "2"):
        raise DomainError("x must be a digit")
    from .biseq import markov_value  # local import to avoid cycles at module load
    y = "1" if x == "2" else "2"
    pattern = x + o[::-1] + "11" + o + y
    t_sum = SurdSum.from_value(t)
    if witness is not None:
        probe = witness.segment(-8 * len(pattern) - 8, 8 * len(pattern) + 8)
        if pattern not in probe:
            raise PreconditionUnverified("witness does not exhibit the base cut")
        mv, _, _ = markov_value(witness)
        if not mv <= t_sum:
            raise PreconditionUnverified("witness Markov value exceeds t")
    else:
        for lp in ("12", "21"):
            for rp in ("12", "21"):
                cand = BiSeq.make(lp, "", pattern, rp)
                mv, _, _ = markov_value(cand)
                if mv <= t_sum:
                    witness = cand
                    break
            if witness is not None:
                break
        if witness is None:
            raise PreconditionUnverified(
                "no periodic closing of the base cut stays below t")
    base = _cut_sup(o, x)
    ext = _cut_sup(ot, x)
    ok = (ext - t_sum).sign() < 0
    return CompareVerdict(ok, base, ext, t)


@dataclass(frozen=True)
class PatternHit:
    name: str
    offset: int
    pattern: str


def forbidden_pattern_check(w, alphabet, n):
    """Scan a digit word for the forbidden factors attached to an alphabet.

    Patterns: alpha^2 ... beta^2 blocks, the four explicit b u+ ... v- a words
    (subject to their size side conditions), and exponent patterns
    alpha^r1 beta alpha^r2 beta with r2 < r1 - 1.  Returns the list of hits.
    """
    s = str(w)
    u, v = alphabet.alpha, alphabet.beta
    ud, vd = u.to_word().digits, v.to_word().digits
    up = u.head().to_word().digits
    vm = v.body().to_word().digits
    hits = []

    def scan(name, pattern):
        start = 0
        while True:
            k = s.find(pattern, start)
            if k < 0:
                break
            hits.append(PatternHit(name, k, pattern))
            start = k + 1

    scan("alpha2beta2", ud * 2 + vd * 2)
    if 2 * (2 * len(u) + len(v)) <= n:
        scan("w0", "11" + up + ud * 2 + vd + ud * 3 + vm + "22")
        scan("w1", "11" + up + ud + vd + ud * 2 + vm + "22")
        scan("w2", "11" + up + ud + vd + ud * 2 + vd + ud * 2 + vm + "22")
    if 2 * (len(u) + len(v)) <= n / 2:
        scan("w3", "11" + up + (ud + vd) * 2 + ud * 2 + vd + ud + vm + "22")
    max_r = len(s) // max(1, len(ud)) + 1
    for r1 in range(2, max_r + 1):
        for r2 in range(0, r1 - 1):
            pat = ud * r1 + vd + ud * r2 + vd
            if len(pat) > len(s):
                continue
            scan("force(r1=%d,r2=%d)" % (r1, r2), pat)
    return hits
