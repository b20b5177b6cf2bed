"""Packed GF(2) vectors and an incrementally maintained reduced row-echelon basis.

Bit ``i`` of a vector lives in word ``i // 64`` at position ``i % 64``.  A row's
pivot is its lowest set bit, and the basis is kept fully reduced: every pivot
bit is clear in all other rows.  That form is unique for a subspace, so two
bases are equal exactly when their spans are.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

WORD = 64
_ONE = np.uint64(1)


def _nwords(m: int) -> int:
    return (m + WORD - 1) // WORD


def _lowest_bit(words: np.ndarray) -> int:
    nz = np.flatnonzero(words)
    if nz.size == 0:
        return -1
    w = int(nz[0])
    x = int(words[w])
    return w * WORD + (x & -x).bit_length() - 1


class BitVec:
    """Fixed-length GF(2) vector; immutable once built."""

    __slots__ = ("m", "words")

    def __init__(self, m: int, words: np.ndarray | None = None):
        if m < 0:
            raise ValueError("length must be non-negative")
        nw = _nwords(m)
        if words is None:
            words = np.zeros(nw, dtype=np.uint64)
        else:
            words = np.array(words, dtype=np.uint64, copy=True)
            if words.shape != (nw,):
                raise ValueError(f"expected {nw} words for length {m}")
            tail = m % WORD
            if tail and int(words[-1]) >> tail:
                raise ValueError("bits set beyond the vector length")
        words.flags.writeable = False
        self.m = m
        self.words = words

    @classmethod
    def zeros(cls, m: int) -> "BitVec":
        return cls(m)

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> "BitVec":
        """Vector with the given positions set; a repeated index toggles."""
        words = np.zeros(_nwords(m), dtype=np.uint64)
        for i in indices:
            if not 0 <= i < m:
                raise IndexError(f"bit {i} outside length {m}")
            words[i // WORD] ^= _ONE << np.uint64(i % WORD)
        return cls(m, words)

    @classmethod
    def from_bools(cls, bits: Sequence[bool] | np.ndarray) -> "BitVec":
        bits = np.asarray(bits, dtype=bool)
        m = bits.size
        padded = np.zeros(_nwords(m) * WORD, dtype=bool)
        padded[:m] = bits
        words = np.packbits(padded, bitorder="little").view(np.uint64)
        return cls(m, words)

    @classmethod
    def from_int(cls, m: int, value: int) -> "BitVec":
        if value < 0 or value >> m:
            raise ValueError("integer does not fit the vector length")
        raw = value.to_bytes(_nwords(m) * 8, "little")
        return cls(m, np.frombuffer(raw, dtype=np.uint64))

    def __int__(self) -> int:
        return int.from_bytes(self.words.tobytes(), "little")

    def to_bools(self) -> np.ndarray:
        return np.unpackbits(self.words.view(np.uint8), bitorder="little")[: self.m].astype(bool)

    def indices(self) -> list[int]:
        return np.flatnonzero(self.to_bools()).tolist()

    def _check(self, other: "BitVec") -> None:
        if self.m != other.m:
            raise ValueError(f"length mismatch: {self.m} vs {other.m}")

    def __xor__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.m, self.words ^ other.words)

    __add__ = __xor__

    def __and__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.m, self.words & other.words)

    def __or__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.m, self.words | other.words)

    def __getitem__(self, i: int) -> bool:
        if not 0 <= i < self.m:
            raise IndexError(i)
        return bool(int(self.words[i // WORD]) >> (i % WORD) & 1)

    def __bool__(self) -> bool:
        return bool(self.words.any())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitVec) and self.m == other.m and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.m, self.words.tobytes()))

    def __len__(self) -> int:
        return self.m

    def __repr__(self) -> str:
        return f"BitVec({self.m}, {self.indices()})"

    def popcount(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def first_set(self) -> int:
        """Lowest set position, or -1 for the zero vector."""
        return _lowest_bit(self.words)

    def dot(self, other: "BitVec") -> int:
        """Inner product over GF(2): parity of the overlap."""
        self._check(other)
        return int(np.bitwise_count(self.words & other.words).sum()) & 1


class Gf2Basis:
    """Subspace of GF(2)^m held as fully reduced rows with lowest-bit pivots.

    Single writer: ``insert`` mutates; ``contains``/``rank``/``rows`` only read.
    """

    def __init__(self, m: int, capacity: int = 16):
        self.m = m
        self._nw = _nwords(m)
        cap = max(1, min(capacity, m)) if m else 1
        self._rows = np.zeros((cap, self._nw), dtype=np.uint64)
        self._piv = np.zeros(cap, dtype=np.int64)
        self._pw = np.zeros(cap, dtype=np.int64)  # pivot word index
        self._pb = np.zeros(cap, dtype=np.uint64)  # pivot bit within word
        self._r = 0

    @classmethod
    def from_vectors(cls, m: int, vectors: Iterable[BitVec]) -> "Gf2Basis":
        b = cls(m)
        for v in vectors:
            b.insert(v)
        return b

    @property
    def rank(self) -> int:
        return self._r

    def __len__(self) -> int:
        return self._r

    def _reduce_words(self, words: np.ndarray) -> np.ndarray:
        r = self._r
        if r == 0:
            return words.copy()
        hit = ((words[self._pw[:r]] >> self._pb[:r]) & _ONE).astype(bool)
        if not hit.any():
            return words.copy()
        # reduced form: each pivot bit of v is cleared by exactly its own row
        return words ^ np.bitwise_xor.reduce(self._rows[:r][hit], axis=0)

    def _words_of(self, v: BitVec) -> np.ndarray:
        if not isinstance(v, BitVec):
            raise TypeError("expected a BitVec")
        if v.m != self.m:
            raise ValueError(f"length mismatch: basis ambient {self.m}, vector {v.m}")
        return v.words

    def reduce(self, v: BitVec) -> BitVec:
        return BitVec(self.m, self._reduce_words(self._words_of(v)))

    def contains(self, v: BitVec) -> bool:
        words = self._words_of(v)
        if self._r == self.m:
            return True
        return not self._reduce_words(words).any()

    __contains__ = contains

    def insert(self, v: BitVec) -> tuple[BitVec, bool]:
        """Reduce ``v`` against the basis; keep the residual as a new row if nonzero."""
        words = self._words_of(v)
        if self._r == self.m:
            return BitVec(self.m), False
        res = self._reduce_words(words)
        p = _lowest_bit(res)
        if p < 0:
            return BitVec(self.m, res), False
        r = self._r
        if r:
            w, b = divmod(p, WORD)
            col = ((self._rows[:r, w] >> np.uint64(b)) & _ONE).astype(bool)
            if col.any():
                rows = self._rows[:r]
                np.bitwise_xor(rows, res, out=rows, where=col[:, None])
        if r == self._rows.shape[0]:
            grow = max(1, min(2 * r, self.m) - r)
            self._rows = np.vstack([self._rows, np.zeros((grow, self._nw), dtype=np.uint64)])
            self._piv = np.concatenate([self._piv, np.zeros(grow, dtype=np.int64)])
            self._pw = np.concatenate([self._pw, np.zeros(grow, dtype=np.int64)])
            self._pb = np.concatenate([self._pb, np.zeros(grow, dtype=np.uint64)])
        self._rows[r] = res
        self._piv[r] = p
        self._pw[r], self._pb[r] = divmod(p, WORD)
        self._r = r + 1
        return BitVec(self.m, res), True

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self._piv[: self._r].tolist()))

    @property
    def rows(self) -> list[BitVec]:
        """Basis rows in increasing pivot order."""
        order = np.argsort(self._piv[: self._r], kind="stable")
        return [BitVec(self.m, self._rows[i]) for i in order]

    def canonical(self) -> tuple[bytes, ...]:
        return tuple(r.words.tobytes() for r in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Gf2Basis) and self.m == other.m and self.canonical() == other.canonical()

    def __repr__(self) -> str:
        return f"Gf2Basis(m={self.m}, rank={self._r})"

    def bool_matrix(self) -> np.ndarray:
        """Rows (pivot order) unpacked to an ``rank x m`` boolean array."""
        order = np.argsort(self._piv[: self._r], kind="stable")
        rows = np.ascontiguousarray(self._rows[order])
        bits = np.unpackbits(rows.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.m].astype(bool)

    def complement(self) -> "Gf2Basis":
        """Basis of the vectors orthogonal to this span (its null space)."""
        m = self.m
        piv = np.asarray(self.pivots, dtype=np.int64)
        free = np.setdiff1d(np.arange(m, dtype=np.int64), piv)
        out = np.zeros((free.size, m), dtype=bool)
        out[np.arange(free.size), free] = True
        if piv.size and free.size:
            # null vector for free column f: e_f plus e_pivot(i) for each row i containing f
            out[:, piv] = self.bool_matrix()[:, free].T
        result = Gf2Basis(m, capacity=max(1, free.size))
        for row in out:
            result.insert(BitVec.from_bools(row))
        return result


def rank(vectors: Iterable[BitVec], m: int) -> int:
    return Gf2Basis.from_vectors(m, vectors).rank


def orthogonal_complement(vectors: Iterable[BitVec], m: int) -> Gf2Basis:
    """Basis of ``{x : <x, v> = 0 for every input v}`` in GF(2)^m."""
    vectors = list(vectors)
    for v in vectors:
        if v.m != m:
            raise ValueError(f"length mismatch: expected {m}, got {v.m}")
    return Gf2Basis.from_vectors(m, vectors).complement()
