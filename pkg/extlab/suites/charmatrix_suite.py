"""
Suites for the characteristic-matrix route: the product formula for N_P,
the algebra of admissible vectors and the G/H factorization of F_P.
"""

import numpy as np

from ..charmatrix import (
    build_S,
    build_T,
    build_U,
    build_W,
    cc_leq,
    characteristic_sequence,
    factorization_check,
    g_matrix,
    h_matrix,
    minor,
    minor_sign_scan,
    n_matrix_bruteforce,
    n_matrix_product,
    random_cc_pair,
)
from ..inequalities import Witness, triples
from ..oracle import extension_count
from .base_suite import BaseSuite


class CharMatrixSuite(BaseSuite):
    """
    M_1 ... M_d equals the brute-force N_P and every M_i is banded; the
    product does not depend on the truncation, and N_P S v <=cc S N_P v for
    random admissible v.
    """

    size_cap = 8
    # truncation compared against the default n + 2
    wide_margin = 5
    num_vectors = 3

    def instances(self):
        for p, d in self.width_two(min_n=1):
            if d.b:
                yield p, d

    def _shift_monotone(self, p, d, product):
        S = build_S(product.dim)
        failures = []
        for index in range(self.num_vectors):
            rng = np.random.RandomState(self._config.seed + index)
            v, _ = random_cc_pair(rng, product.dim)
            if not cc_leq((product @ S).apply(v), (S @ product).apply(v)):
                failures.append(Witness(p, d, None, tuple(v), "NSv", "SNv"))
        return failures

    def check(self, item):
        p, d = item
        violations = []
        seq = characteristic_sequence(p, d)
        for index, m in enumerate(seq.matrices):
            if not m.is_banded():
                violations.append(Witness(p, d, None, (index + 1,), seq.kinds[index], "banded"))
        product, expected = n_matrix_product(seq), n_matrix_bruteforce(p, d)
        if product != expected:
            diff = np.argwhere(product.data != expected.data)[0]
            i, j = int(diff[0]), int(diff[1])
            violations.append(
                Witness(p, d, None, (i + 1, j + 1), product.data[i, j], expected.data[i, j])
            )
        wide = n_matrix_product(characteristic_sequence(p, d, dim=p.n + self.wide_margin))
        if wide.block(product.dim) != product:
            violations.append(Witness(p, d, None, (product.dim, wide.dim), "truncation", 0))
        violations += self._shift_monotone(p, d, product)
        checks = 2 + seq.length + self.num_vectors
        return violations, {"checks": checks, "extensions": extension_count(p)}


class AdmissibleSuite(BaseSuite):
    """
    Generator identities at two truncations, then random admissible pairs
    v <=cc w pushed through S, T, U and W_k.
    """

    truncations = (6, 10)
    num_pairs = 10 ** 4
    vector_length = 10
    max_k = 4

    def instances(self):
        for dim in self.truncations:
            yield "identity", dim
        for index in range(self.num_pairs):
            yield "pair", index

    def _identities(self, dim):
        S, T, U = build_S(dim), build_T(dim), build_U(dim)
        failures = []
        if (S @ T).block(dim - 1) != (U @ T @ S).block(dim - 1):
            failures.append(("ST=UTS", 0))
        for k in range(dim):
            Wk, Wk1 = build_W(k, dim), build_W(k + 1, dim)
            if S @ Wk != Wk1 @ S:
                failures.append(("SW=WS", k))
            if (S @ Wk @ T).block(dim - 1) != (Wk1 @ U @ T @ S).block(dim - 1):
                failures.append(("SWT=WUTS", k))
        return failures, 1 + 2 * dim

    def _pair(self, index):
        length = self.vector_length
        rng = np.random.RandomState(self._config.seed + index)
        v, w = random_cc_pair(rng, length)
        S, T, U = build_S(length), build_T(length), build_U(length)
        failures = []
        generators = [("S", S), ("T", T), ("U", U)]
        generators += [("W%d" % k, build_W(k, length)) for k in range(1, self.max_k + 1)]
        for name, m in generators:
            if not cc_leq(m.apply(v), m.apply(w)):
                failures.append((name, 0))
        for k in range(1, self.max_k + 1):
            Wk, Wk1 = build_W(k, length), build_W(k + 1, length)
            # W_k v <=cc W_{k+1} U v
            if not cc_leq(Wk.apply(v), (Wk1 @ U).apply(v)):
                failures.append(("WU", k))
            # M S v <=cc S M v for M = W_k T
            m = Wk @ T
            if not cc_leq((m @ S).apply(v), (S @ m).apply(v)):
                failures.append(("MS", k))
        return failures, len(generators) + 2 * self.max_k

    def check(self, item):
        kind, value = item
        failures, checks = self._identities(value) if kind == "identity" else self._pair(value)
        violations = [
            Witness(None, None, None, (value, k), name, kind) for name, k in failures
        ]
        return violations, {"checks": checks}


class MinorsSuite(BaseSuite):
    """
    On every triple with z1 < z2 < z3 imposed: 2x2 minors of G are nonnegative,
    those of H nonpositive, and the G/H factorization reproduces F.
    """

    size_cap = 8

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        violations = []
        checks = 0
        for t in triples(p.n):
            normalized = t.normalize(p)
            if normalized is None:
                continue
            g, h = g_matrix(normalized, t), h_matrix(normalized, t)
            for m, sign, label in ((g, 1, "G"), (h, -1, "H")):
                found = minor_sign_scan(m, sign)
                if found is not None:
                    violations.append(
                        Witness(p, d, t, tuple(x + 1 for x in found), minor(m, *found), label)
                    )
            if not factorization_check(p, t):
                violations.append(Witness(p, d, t, (), "factorized", "oracle"))
            checks += 3
        return violations, {"checks": checks}
