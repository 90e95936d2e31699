"""The resultant sieve.

For a fixed order N >= 7 and a set B of braid words with distinct modular
projections, the sieve computes the 2x2 determinants
D_{ij,l}(T', T'') = det[s1^l b_i v_{T'} | b_j v_{T''}] over Z[t, t^-1] and
their resultants against phi_N(-t).  If all resultants are nonzero the set
is informative, and its nonunit resultants carry the only primes p and
minimal polynomials m that can support a genus-zero realization; those
(p, m, T) triples are the exceptional candidates handed to the genus
filter.

The coefficient a_T depends on M = ord(xi), which in turn depends on the
characteristic, so everything runs per branch (p = 2, p = 3, p odd) with M
fixed, and extracted primes inconsistent with the branch are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import sympy

from .burau import BraidWord, modular_projection, to_burau
from .exactalg import IntPoly, cyclotomic, fp_factor, resultant, \
    substitute_neg, _fp_gcd
from .skeleton import DEFAULT_STATE_CAP, UniversalGroupSpec, enumerate_universal, \
    genus
from .typesys import epsilon_p, k_threshold, root_spec, type_coefficient_laurent

SWEEP_RANGE = (7, 26)


@dataclass(frozen=True)
class SieveBranch:
    """One characteristic class of a sweep value N, with its fixed M."""

    N: int
    char_class: str  # "p=2" | "p odd" | "p=3"
    M: int
    types: tuple

    def accepts_prime(self, p):
        if self.char_class == "p=2":
            return p == 2
        if self.char_class == "p=3":
            return p == 3
        return p % 2 == 1 and p != 3


def _branch_types(char_class, M):
    tags = ["I", "II"]
    if char_class == "p=3":
        tags.append("III3")
    elif M % 3 == 0:
        tags.extend(["III+", "III-"])
    if M % 2 == 1:
        tags.append("IV")
    return tuple(tags)


def branches_for(N):
    """The valid characteristic branches for this N.

    p = 2 needs N odd (xi generates an odd-order group) and p = 3 needs
    3 not dividing N, since N divides the unit group order p^d - 1.
    """
    out = []
    if N % 2 == 1:
        out.append(SieveBranch(N, "p=2", N, _branch_types("p=2", N)))
    M = epsilon_p(N, 0)
    out.append(SieveBranch(N, "p odd", M, _branch_types("p odd", M)))
    if N % 3 != 0:
        out.append(SieveBranch(N, "p=3", M, _branch_types("p=3", M)))
    return out


@dataclass(frozen=True)
class IndexSeq:
    """One determinant index (T', T'', i, j, l); the all-equal l=0 case is
    excluded because its determinant vanishes identically."""

    t1: str
    t2: str
    i: int
    j: int
    l: int

    def __post_init__(self):
        if self.t1 == self.t2 and self.i == self.j and self.l == 0:
            raise ValueError("excluded index sequence (identically zero)")


def index_sequences(branch, k):
    for t1 in branch.types:
        for t2 in branch.types:
            for i in range(k):
                for j in range(k):
                    for l in range(branch.N):
                        if t1 == t2 and i == j and l == 0:
                            continue
                        yield IndexSeq(t1, t2, i, j, l)


@dataclass(frozen=True)
class ExceptionalTriple:
    """A sieve survivor candidate: prime, minimal polynomial, type tag."""

    p: int
    min_poly: IntPoly
    type_tag: str

    def sort_key(self):
        return (self.p, str(self.min_poly), self.type_tag)

    def __str__(self):
        return f"({self.p}, {self.min_poly}, {self.type_tag})"


class _BranchTable:
    """Precomputed vectors b_i * v_T and powers of s1 for one (branch, B)."""

    def __init__(self, branch, words):
        self.branch = branch
        self.words = words
        mats = [to_burau(w) for w in words]
        self.vectors = {}
        for tag in branch.types:
            a = type_coefficient_laurent(
                tag, branch.M, "p=3" if branch.char_class == "p=3" else "")
            v = (a, IntPoly.one())
            for i, m in enumerate(mats):
                self.vectors[(i, tag)] = m.apply(v)
        one = IntPoly.one()
        self.neg_t_pow = []
        self.phi_tilde = []
        cur = one
        acc = IntPoly.zero()
        for l in range(branch.N):
            self.neg_t_pow.append(cur)
            self.phi_tilde.append(acc)
            acc = acc + cur
            cur = cur * IntPoly((-1,), 1)

    def determinant(self, seq):
        u0, u1 = self.vectors[(seq.i, seq.t1)]
        w0, w1 = self.vectors[(seq.j, seq.t2)]
        top = self.neg_t_pow[seq.l] * u0 + self.phi_tilde[seq.l] * u1
        return top * w1 - u1 * w0


def determinant_D(seq, words, branch):
    """The sieve determinant for one index sequence, shift-cleared.

    Whatever Laurent shift the determinant carries is dropped: the
    cyclotomic partner has constant term 1, so shifts never change whether
    a resultant vanishes or which primes divide it.
    """
    _require_distinct_projections(words)
    d = _BranchTable(branch, words).determinant(seq)
    return IntPoly(d.poly_part())


def resultant_with_cyclotomic(D, N):
    """Resultant of D against phi_N(-t) over Z."""
    if D.is_zero:
        raise ValueError("degenerate zero determinant")
    return resultant(D, substitute_neg(cyclotomic(N)))


def _require_distinct_projections(words):
    seen = {}
    for w in words:
        pr = modular_projection(w)
        if pr in seen:
            raise ValueError(
                f"words {seen[pr]!s} and {w!s} share a modular projection")
        seen[pr] = w


def parse_word_set(texts):
    return [BraidWord.parse(t) for t in texts]


def is_informative(words, N, branch, _cyc=None):
    """Size at least k_N and every resultant nonzero, on this branch."""
    if len(words) < k_threshold(N):
        return False
    _require_distinct_projections(words)
    cyc = _cyc if _cyc is not None else substitute_neg(cyclotomic(N))
    table = _BranchTable(branch, words)
    for seq in index_sequences(branch, len(words)):
        d = table.determinant(seq)
        if d.is_zero or resultant(d, cyc) == 0:
            return False
    return True


def _extract_branch_triples(words, N, branch, cyc, order_cache):
    """The exceptional triples E(B) contributed by one branch.

    Returns None if the set fails informativeness on this branch (a zero
    determinant or zero resultant proves nothing, it only disqualifies B).
    """
    table = _BranchTable(branch, words)
    cyc_coeffs = cyc.poly_part()
    triples = set()
    factor_cache = {}
    for seq in index_sequences(branch, len(words)):
        d = table.determinant(seq)
        if d.is_zero:
            return None
        r = resultant(d, cyc)
        if r == 0:
            return None
        r = abs(r)
        if r == 1:
            continue
        if r not in factor_cache:
            factor_cache[r] = sorted(sympy.factorint(r))
        for p in factor_cache[r]:
            if not branch.accepts_prime(p):
                continue
            dp = d.reduce_mod(p)
            cp = tuple(c % p for c in cyc_coeffs)
            g = _fp_gcd(dp, cp, p)
            if len(g) <= 1:
                continue
            for fac, _ in fp_factor(g, p):
                key = (p, fac)
                if key not in order_cache:
                    rs = root_spec(p, IntPoly(fac))
                    order_cache[key] = rs.N
                if order_cache[key] == N:
                    triples.add(ExceptionalTriple(p, IntPoly(fac), seq.t1))
    return triples


def exceptional_triples(N, word_sets):
    """Candidate triples for N: per-branch intersection over the sets.

    Every set must be informative for N on every valid branch; the triples
    recorded by each set are intersected (a genuine root is caught by every
    informative set), then the branches' contributions are united.
    """
    if not word_sets:
        raise ValueError("at least one candidate set required")
    cyc = substitute_neg(cyclotomic(N))
    order_cache = {}
    out = set()
    for branch in branches_for(N):
        per_set = []
        for words in word_sets:
            if len(words) < k_threshold(N):
                raise ValueError(f"set of size {len(words)} < k_{N}")
            _require_distinct_projections(words)
            triples = _extract_branch_triples(words, N, branch, cyc, order_cache)
            if triples is None:
                raise ValueError(
                    f"set {[str(w) for w in words]} is not informative "
                    f"for N={N} on branch {branch.char_class}")
            per_set.append(triples)
        merged = per_set[0]
        for t in per_set[1:]:
            merged = merged & t
        out |= merged
    return frozenset(out)


# -- default candidate sets -------------------------------------------------

# beta1 and beta2 below are the denominators-cleared words t*s2*s1^-1 and
# t*s2^-1*s1; the sets for 7 <= N <= 10 need several elements, the rest get
# by with singletons.  Informativeness is never assumed: every run
# re-verifies it and falls back to search_informative_sets.
_B1 = "T s2 s1^-1"
_B2 = "T s2^-1 s1"
_B1B2 = _B1 + " " + _B2
_B2B1 = _B2 + " " + _B1

DEFAULT_INFORMATIVE_SETS = {
    7: [
        ["e", _B1 + " " + _B1, _B1 + " " + _B1 + " " + _B1, _B1B2, _B2B1],
        ["e", _B1 + " " + _B1, _B1B2, _B1B2 + " " + _B1B2, _B2B1],
    ],
    8: [
        ["e", _B1 + " " + _B1, _B1B2],
        ["e", _B1 + " " + _B1, _B1B2 + " " + _B1],
    ],
    9: [["e", _B2], ["e", _B1B2], ["e", _B2B1]],
    10: [["e", _B2], ["e", _B1B2], ["e", _B2B1]],
}
DEFAULT_SINGLETONS = [["e"], [_B2], [_B2B1]]


def candidate_sets_for(N, overrides=None):
    if overrides and N in overrides:
        return [parse_word_set(s) for s in overrides[N]]
    if N in DEFAULT_INFORMATIVE_SETS:
        return [parse_word_set(s) for s in DEFAULT_INFORMATIVE_SETS[N]]
    return [parse_word_set(s) for s in DEFAULT_SINGLETONS]


def _word_pool(max_len=4):
    """Short words with pairwise-distinct modular projections, id first."""
    letters = ["s1", "s2", "s1^-1", "s2^-1"]
    pool = [BraidWord.identity()]
    seen = {modular_projection(pool[0])}
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for base in frontier:
            for letter in letters:
                text = (base + " " + letter).strip()
                w = BraidWord.parse(text)
                pr = modular_projection(w)
                nxt.append(text)
                if pr not in seen:
                    seen.add(pr)
                    pool.append(w)
        frontier = nxt
    return pool


def search_informative_sets(N, want=2, max_pool=24, max_combos=4000):
    """Fallback search for informative sets of size k_N.

    Tries subsets of a pool of short words (breadth-first by word length)
    until `want` sets informative on every valid branch are found.
    """
    k = k_threshold(N)
    branches = branches_for(N)
    cyc = substitute_neg(cyclotomic(N))
    pool = _word_pool()[:max_pool]
    found = []
    tried = 0
    for combo in combinations(range(len(pool)), k):
        tried += 1
        if tried > max_combos:
            break
        words = [pool[i] for i in combo]
        if all(is_informative(words, N, b, _cyc=cyc) for b in branches):
            found.append(words)
            if len(found) >= want:
                break
    return found


# -- the sweep ---------------------------------------------------------------


def full_sweep(n_range=SWEEP_RANGE, config=None):
    """Run the sieve for each N and genus-filter the candidates.

    Returns a mapping N -> report with the informative sets used, the
    candidate triples, and the genus-zero survivors.  Raises if some N has
    no informative set even after the fallback search, or if a candidate
    enumeration exceeds the state cap (both make the run unusable).
    """
    lo, hi = n_range
    if lo < SWEEP_RANGE[0] or hi > SWEEP_RANGE[1] or lo > hi:
        raise ValueError(f"sweep range must lie within {SWEEP_RANGE}")
    config = config or {}
    overrides = config.get("informative_sets")
    state_cap = config.get("state_cap", DEFAULT_STATE_CAP)
    results = {}
    for N in range(lo, hi + 1):
        word_sets = candidate_sets_for(N, overrides)
        usable, rejected = [], []
        branches = branches_for(N)
        cyc = substitute_neg(cyclotomic(N))
        for words in word_sets:
            if len(words) >= k_threshold(N) and all(
                    is_informative(words, N, b, _cyc=cyc) for b in branches):
                usable.append(words)
            else:
                rejected.append(words)
        if not usable:
            usable = search_informative_sets(N)
            if not usable:
                raise RuntimeError(f"no informative set found for N={N}")
        candidates = exceptional_triples(N, usable)
        survivors = _genus_filter(candidates, N, state_cap)
        results[N] = {
            "sets": [[str(w) for w in ws] for ws in usable],
            "rejected": [[str(w) for w in ws] for ws in rejected],
            "candidates": sorted(candidates, key=ExceptionalTriple.sort_key),
            "survivors": survivors,
        }
    return results


def _genus_filter(candidates, N, state_cap):
    """Keep the (p, m) pairs whose universal subgroup has genus zero.

    Each candidate triple is enumerated with its own type vector; conjugate
    types agree on genus, so any recorded type certifies the pair.
    """
    by_pair = {}
    for tr in sorted(candidates, key=ExceptionalTriple.sort_key):
        by_pair.setdefault((tr.p, tr.min_poly), []).append(tr.type_tag)
    survivors = []
    for (p, m), tags in sorted(by_pair.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        root = root_spec(p, m)
        assert root.N == N
        zero_tags = []
        for tag in tags:
            sk = enumerate_universal(UniversalGroupSpec(root, tag, "bu3"),
                                     state_cap)
            if genus(sk) == 0:
                zero_tags.append(tag)
        if zero_tags:
            survivors.append({
                "p": p, "minPoly": str(m), "N": N, "types": sorted(zero_tags),
            })
    return survivors


def sweep_pairs(results):
    """The classification a sweep implies: sorted (p, minPoly, N) survivors."""
    out = []
    for N in sorted(results):
        for s in results[N]["survivors"]:
            out.append((s["p"], s["minPoly"], N))
    return sorted(out)
