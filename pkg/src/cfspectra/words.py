"""Finite words over {1,2} and their {a,b}-block form (a = 22, b = 11)."""

from __future__ import annotations

from dataclasses import dataclass

_SUBST = {
    "U": {"a": "ab", "b": "b"},
    "V": {"a": "a", "b": "ab"},
}


@dataclass(frozen=True)
class Word:
    """A finite digit string over {1,2}."""

    digits: str

    def __post_init__(self):
        if set(self.digits) - {"1", "2"}:
            raise ValueError("word digits must be 1 or 2: %r" % self.digits)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i):
        got = self.digits[i]
        return Word(got) if isinstance(i, slice) else got

    def __add__(self, other):
        return Word(self.digits + (other.digits if isinstance(other, Word) else str(other)))

    def __bool__(self):
        return bool(self.digits)

    def transpose(self):
        """Reversal w* = a_n...a_1."""
        return Word(self.digits[::-1])

    def __str__(self):
        return self.digits

    def __contains__(self, other):
        sub = other.digits if isinstance(other, Word) else str(other)
        return sub in self.digits


@dataclass(frozen=True)
class ABWord:
    """A finite word over the block letters a = 22, b = 11."""

    letters: str

    def __post_init__(self):
        if set(self.letters) - {"a", "b"}:
            raise ValueError("letters must be a or b: %r" % self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        got = self.letters[i]
        return ABWord(got) if isinstance(i, slice) else got

    def __add__(self, other):
        return ABWord(self.letters + (other.letters if isinstance(other, ABWord) else str(other)))

    def __mul__(self, k):
        return ABWord(self.letters * k)

    def __bool__(self):
        return bool(self.letters)

    def __contains__(self, other):
        sub = other.letters if isinstance(other, ABWord) else str(other)
        return sub in self.letters

    def transpose(self):
        """Reversal; commutes with the digit image since a and b are palindromes."""
        return ABWord(self.letters[::-1])

    def to_word(self):
        return Word("".join("22" if c == "a" else "11" for c in self.letters))

    @classmethod
    def from_word(cls, w):
        """Parse a digit word into blocks; every run of equal digits must be even."""
        s = w.digits if isinstance(w, Word) else str(w)
        out = []
        i = 0
        while i < len(s):
            j = i
            while j < len(s) and s[j] == s[i]:
                j += 1
            run = j - i
            if run % 2:
                raise ValueError("odd run of %s (length %d) at offset %d" % (s[i], run, i))
            out.append(("a" if s[i] == "2" else "b") * (run // 2))
            i = j
        return cls("".join(out))

    def count(self, letter):
        return self.letters.count(letter)

    def head(self):
        """w+ : drop the first letter (empty word for length <= 1)."""
        return ABWord(self.letters[1:])

    def body(self):
        """w- : drop the last letter (empty word for length <= 1)."""
        return ABWord(self.letters[:-1])

    def __str__(self):
        return self.letters


@dataclass(frozen=True)
class UVWord:
    """A finite word over the Nielsen substitution names U, V."""

    letters: str

    def __post_init__(self):
        if set(self.letters) - {"U", "V"}:
            raise ValueError("letters must be U or V: %r" % self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        return UVWord(self.letters + (other.letters if isinstance(other, UVWord) else str(other)))

    def __str__(self):
        return self.letters


def apply_subst(w_uv, w_ab):
    """Apply a {U,V}-word to an {a,b}-word.

    U maps a -> ab, b -> b; V maps a -> a, b -> ab.  A composite word is read
    outermost-first left to right: W = XY means X(Y(w)), so the rightmost
    letter acts first.
    """
    s = str(w_ab)
    for ch in reversed(str(w_uv)):
        table = _SUBST[ch]
        s = "".join(table[c] for c in s)
    return ABWord(s)


def transpose(w):
    """Reversal of a Word or ABWord (same type back)."""
    return w.transpose()
