"""Smoke tests for the python package.

The generator checks rebuild the expected graphs with an independent
pure-python implementation of the counter-based stream, so the package's
reproducibility contract is verified end to end without trusting the C++
code under test.
"""

import math

import pytest

import seymour_vertices as sv

M32 = 0xFFFFFFFF


def philox_block(key0, key1, c0, c1, c2, c3):
    k0, k1 = key0, key1
    for _ in range(10):
        p0 = (0xD2511F53 * c0) & 0xFFFFFFFFFFFFFFFF
        p1 = (0xCD9E8D57 * c2) & 0xFFFFFFFFFFFFFFFF
        hi0, lo0 = p0 >> 32, p0 & M32
        hi1, lo1 = p1 >> 32, p1 & M32
        c0 = (hi1 ^ c1 ^ k0) & M32
        c1 = lo1
        c2 = (hi0 ^ c3 ^ k1) & M32
        c3 = lo0
        k0 = (k0 + 0x9E3779B9) & M32
        k1 = (k1 + 0xBB67AE85) & M32
    return c0, c1, c2, c3


class Stream:
    def __init__(self, seed, stream_id):
        self.k0 = seed & M32
        self.k1 = (seed >> 32) & M32
        self.sid = stream_id
        self.block = 0
        self.buf = []

    def next_u64(self):
        if not self.buf:
            c = philox_block(
                self.k0,
                self.k1,
                self.block & M32,
                (self.block >> 32) & M32,
                self.sid & M32,
                (self.sid >> 32) & M32,
            )
            self.block += 1
            self.buf = [c[0] | (c[1] << 32), c[2] | (c[3] << 32)]
        return self.buf.pop(0)

    def next_unit(self):
        return (self.next_u64() >> 11) * 2.0 ** -53


class Bits:
    def __init__(self, stream):
        self.stream = stream
        self.word = 0
        self.left = 0

    def bit(self):
        if self.left == 0:
            self.word = self.stream.next_u64()
            self.left = 64
        b = self.word & 1
        self.word >>= 1
        self.left -= 1
        return b


def reference_tournament_text(n, seed, trial):
    bits = Bits(Stream(seed, trial))
    adj = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if bits.bit():
                adj[u][v] = 1
            else:
                adj[v][u] = 1
    return "%d\n" % n + "".join("".join(map(str, row)) + "\n" for row in adj)


def reference_digraph_text(n, p, seed, trial):
    stream = Stream(seed, trial)
    adj = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            x = stream.next_unit()
            if x < p:
                adj[u][v] = 1
            elif x < 2 * p:
                adj[v][u] = 1
    return "%d\n" % n + "".join("".join(map(str, row)) + "\n" for row in adj)


def reference_seymour_set(g):
    n = g.order()
    out = []
    for v in range(n):
        n1 = {u for u in range(n) if g.has_arc(v, u)}
        n2 = set()
        for u in n1:
            for w in range(n):
                if g.has_arc(u, w) and w != v and w not in n1:
                    n2.add(w)
        if len(n2) >= len(n1):
            out.append(v)
    return out


def test_tournament_matches_independent_reference():
    for n, seed, trial in [(10, 42, 0), (23, 7, 5), (1, 0, 0)]:
        assert sv.gen_tournament(n, seed, trial).to_text() == reference_tournament_text(
            n, seed, trial
        )


def test_digraph_matches_independent_reference():
    for n, p, seed, trial in [(8, 0.3, 42, 0), (17, 0.45, 11, 2), (6, 0.0, 3, 1)]:
        assert sv.gen_digraph(n, p, seed, trial).to_text() == reference_digraph_text(
            n, p, seed, trial
        )


def test_three_cycle_is_all_seymour():
    g = sv.Digraph.from_text("3\n010\n001\n100\n")
    assert sv.seymour_set(g) == [0, 1, 2]
    assert sv.second_neighborhood(g, 0) == [2]
    assert sv.distances_from(g, 0) == [0, 1, 2]


def test_seymour_set_matches_definition():
    g = sv.gen_tournament(40, 99)
    assert sv.seymour_set(g) == reference_seymour_set(g)
    d = sv.gen_digraph(30, 0.2, 99)
    assert sv.seymour_set(d) == reference_seymour_set(d)


def test_run_trials_deterministic_across_workers():
    kwargs = dict(model="tournament", n=60, trials=300, master_seed=77, deviation_A=2.5)
    a = sv.run_trials(workers=1, **kwargs)
    b = sv.run_trials(workers=4, **kwargs)
    assert a == b
    assert a["trials"] == 300
    assert sum(a["histogram"].values()) == 300
    assert 0.0 <= a["frac_deviating"] <= 1.0


def test_expectation_bounds_frozen_values():
    b = sv.expectation_bounds(25)
    assert b["parity"] == "odd"
    assert b["e_s_lower"] == pytest.approx(14.113396711444182, abs=1e-12)
    assert b["e_s_upper"] == pytest.approx(14.916109733486849, abs=1e-12)
    assert b["diameter_defect"] == pytest.approx(0.4013565110213335, abs=1e-12)


def test_exhaustive_three_vertices_exact():
    s = sv.exhaustive_tournaments(3)
    assert s["total_graphs"] == 8
    assert s["exact_e_s"]["rational"] == "3/2"
    assert s["exact_e_s"]["value"] == 1.5
    assert s["min_s"] == 1
    assert s["histogram"] == {1: 6, 3: 2}


def test_find_triangle_on_rotational_tournament():
    n = 9
    g = sv.Digraph(n)
    for i in range(n):
        for d in range(1, (n - 1) // 2 + 1):
            g.add_arc(i, (i + d) % n)
    tri = sv.find_triangle(g)
    assert tri is not None
    a, b, c = tri
    assert g.has_arc(a, b) and g.has_arc(b, c) and g.has_arc(c, a)


def test_window_and_lower_bound():
    w = sv.digraph_window(10000, 0.1, 0.1)
    assert w["p_min"] == pytest.approx(0.0439792164336178, abs=1e-12)
    assert w["residual"] < 1e-12
    assert not w["empty"]
    lb = sv.digraph_expectation_lower(2000, 0.3)
    assert lb["value"] > 1999.999


def test_analytics_edge_values():
    assert sv.binom_tail_le(5, 0.5, 2) == 0.5
    assert sv.central_binom_pmf(2) == 0.5
    assert sv.variance_coeff_even() == pytest.approx(0.25 - 1.0 / (2.0 * math.pi), abs=1e-15)
    terms = sv.variance_pi_terms(1001)
    assert terms["diff"] == 0.0


def test_errors_translate_to_python_exceptions():
    with pytest.raises(ValueError):
        sv.parse_probability("0.6")
    with pytest.raises(ValueError):
        sv.Digraph.from_text("2\n11\n11\n")
    with pytest.raises(ValueError):
        sv.exhaustive_tournaments(9)
    with pytest.raises(ValueError):
        sv.run_trials(model="nonsense", n=5)
