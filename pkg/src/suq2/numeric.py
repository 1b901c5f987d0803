"""Independent numerical oracle: truncated ladder-operator models.

For a numeric complex parameter ``0 < |q| < 1`` the pair of operators on the
basis ``e(n, k)`` (0 <= n <= N radial, k cyclic mod M)

    gamma e(n, k) = conj(q)^n e(n, k+1 mod M)
    alpha e(n, k) = sqrt(1 - |q|^(2n)) e(n-1, k),    alpha e(0, k) = 0

satisfies the five defining relations exactly on every column with
n <= N - 1; truncating the radial ladder at n = N leaves a defect only in
the relation ``alpha alpha* + |q|^2 gamma* gamma = 1`` on the boundary row.
The winding direction is cyclic so gamma stays exactly normal.  Checking by
hand on basis vectors: the ratio of ``alpha gamma`` to ``gamma alpha`` is
conj(q) (both sides move (n,k) to (n-1,k+1), with weights conj(q)^n
sqrt(1-|q|^(2n)) and sqrt(1-|q|^(2n)) conj(q)^(n-1)); similarly
``alpha gamma* = q gamma* alpha``; ``alpha* alpha + gamma* gamma`` is diagonal
with entries (1-|q|^(2n)) + |q|^(2n) = 1; ``alpha alpha* + |q|^2 gamma* gamma``
is diagonal with entries (1-|q|^(2n+2)) + |q|^(2n+2) = 1 for n < N; and
``gamma`` is normal because gamma* gamma and gamma gamma* are both the
diagonal |q|^(2n).  That derivation is this oracle's certificate.

Parameters with ``|q| >= 1`` are handled by building the model at ``1/q``
and transporting the generators along the parameter-inversion isomorphism
(alpha -> alpha*, gamma -> q^-1 gamma).

The oracle is deliberately independent of the rewrite engine: it multiplies
concrete matrices, so agreement between a raw word and its normal form is
evidence that the directed rule system computes honest algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleError


RELATION_NAMES = (
    "alpha* alpha + gamma* gamma = 1",
    "alpha alpha* + |q|^2 gamma* gamma = 1",
    "gamma gamma* = gamma* gamma",
    "alpha gamma = conj(q) gamma alpha",
    "alpha gamma* = q gamma* alpha",
)


@dataclass
class TruncatedRep:
    """Concrete matrices for one parameter value on the truncated ladder."""

    qval: complex
    N: int
    M: int
    alpha: np.ndarray
    gamma: np.ndarray
    transported: bool = False

    @property
    def dim(self):
        return (self.N + 1) * self.M

    def index(self, n, k):
        return n * self.M + (k % self.M)

    def interior_mask(self, depth=1):
        """Column selector for n <= N - depth."""
        mask = np.zeros(self.dim, dtype=bool)
        cut = max(self.N - depth + 1, 0)
        mask[: cut * self.M] = True
        return mask

    def letter_matrices(self):
        """Matrices for the letters (g, g', a, a') in generator order."""
        return (
            self.gamma,
            self.gamma.conj().T,
            self.alpha,
            self.alpha.conj().T,
        )

    def letter_columns(self):
        """Sparse (target_row, amplitude) column form of each letter matrix.

        Every letter has at most one nonzero per column, and products of such
        matrices keep that shape, so words evaluate in O(dim) per letter.
        A target row of -1 marks a killed column.
        """
        if not hasattr(self, "_letters"):
            forms = []
            for mat in self.letter_matrices():
                rows, cols = np.nonzero(mat)
                if len(set(cols)) != len(cols):
                    raise AssertionError("letter matrix is not column-sparse")
                perm = np.full(self.dim, -1, dtype=int)
                amp = np.zeros(self.dim, dtype=complex)
                perm[cols] = rows
                amp[cols] = mat[rows, cols]
                forms.append((perm, amp))
            self._letters = tuple(forms)
        return self._letters


def build(qval, N, M):
    """Build the truncated model; transports through 1/q when |q| >= 1."""
    qval = complex(qval)
    if qval == 0:
        raise ValueError("qval must be nonzero")
    if abs(qval) == 1.0:
        raise ValueError("the ladder model needs |q| != 1")
    if not (2 <= M):
        raise ValueError("winding modulus M must be at least 2")
    if not (2 <= N):
        raise ValueError("radial cutoff N must be at least 2")
    if abs(qval) > 1:
        inner = build(1 / qval, N, M)
        return TruncatedRep(
            qval=qval,
            N=N,
            M=M,
            alpha=inner.alpha.conj().T,
            gamma=inner.gamma / qval,
            transported=True,
        )
    dim = (N + 1) * M
    alpha = np.zeros((dim, dim), dtype=complex)
    gamma = np.zeros((dim, dim), dtype=complex)
    qc = qval.conjugate()
    mod2 = abs(qval) ** 2
    for n in range(N + 1):
        for k in range(M):
            col = n * M + k
            gamma[n * M + ((k + 1) % M), col] = qc**n
            if n > 0:
                alpha[(n - 1) * M + k, col] = math.sqrt(1 - mod2**n)
    return TruncatedRep(qval=qval, N=N, M=M, alpha=alpha, gamma=gamma)


def relation_residuals(rep):
    """Max-norm residuals of the five relations, on the interior and in full.

    Returns ``{name: (interior, full)}``; only interior residuals are exact
    up to rounding, the boundary row carries the expected truncation defect
    which is reported but never asserted small.
    """
    a = rep.alpha
    g = rep.gamma
    astar = a.conj().T
    gstar = g.conj().T
    eye = np.eye(rep.dim)
    mod2 = abs(rep.qval) ** 2
    qc = rep.qval.conjugate()
    diffs = (
        astar @ a + gstar @ g - eye,
        a @ astar + mod2 * (gstar @ g) - eye,
        g @ gstar - gstar @ g,
        a @ g - qc * (g @ a),
        a @ gstar - rep.qval * (gstar @ a),
    )
    mask = rep.interior_mask(1)
    out = {}
    for name, diff in zip(RELATION_NAMES, diffs):
        interior = float(np.max(np.abs(diff[:, mask]))) if mask.any() else 0.0
        full = float(np.max(np.abs(diff)))
        out[name] = (interior, full)
    return out


def _word_columns(rep, word):
    """(target_row, amplitude) per column for one operator word."""
    letters = rep.letter_columns()
    idx = np.arange(rep.dim)
    val = np.ones(rep.dim, dtype=complex)
    for i in reversed(word):
        perm, amp = letters[i]
        alive = idx >= 0
        safe = np.where(alive, idx, 0)
        val = np.where(alive, val * amp[safe], 0.0)
        idx = np.where(alive, perm[safe], -1)
    return idx, val


def _accumulate(rep, total, word, scale):
    idx, val = _word_columns(rep, word)
    keep = idx >= 0
    np.add.at(total, (idx[keep], np.arange(rep.dim)[keep]), scale * val[keep])


def evaluate_element(rep, x):
    """Substitute the model's operators into an element over the 4-letter algebra."""
    if x.pres.n_gens != 4 or [g.name for g in x.pres.generators] != [
        "g",
        "g'",
        "a",
        "a'",
    ]:
        raise ValueError("element must live over the 4-generator algebra")
    total = np.zeros((rep.dim, rep.dim), dtype=complex)
    for word, coeff in x.terms():
        _accumulate(rep, total, word, coeff.evaluate(rep.qval))
    return total


def evaluate_raw(rep, raw_terms):
    """Like evaluate_element but for unnormalized (coeff, word) pairs."""
    total = np.zeros((rep.dim, rep.dim), dtype=complex)
    for coeff, word in raw_terms:
        _accumulate(rep, total, word, coeff.evaluate(rep.qval))
    return total


def oracle_compare(rep, pres, raw_terms, depth=None):
    """Max deviation between a raw expression and its engine normal form.

    The comparison is restricted to columns with n <= N - depth, where depth
    bounds the word length: raising chains started there never touch the
    truncated boundary row, so the model is exact on that block.
    """
    raw = []
    maxlen = 0
    for coeff, word in raw_terms:
        word = tuple(word)
        maxlen = max(maxlen, len(word))
        raw.append((coeff, word))
    if depth is None:
        depth = maxlen
    if depth > rep.N - 1:
        raise ValueError("word length exceeds the exact interior of the model")
    direct = evaluate_raw(rep, raw)
    normal = evaluate_element(rep, pres.normalize_raw(raw))
    mask = rep.interior_mask(depth)
    return float(np.max(np.abs((direct - normal)[:, mask])))


def gamma_singular_values(rep):
    """Sorted distinct singular values; must be {|q|^n : 0 <= n <= N}."""
    return np.linalg.svd(rep.gamma, compute_uv=False)


def expected_singular_values(rep):
    base = sorted(
        (abs(rep.qval) ** n for n in range(rep.N + 1)), reverse=True
    )
    return np.repeat(base, rep.M)
