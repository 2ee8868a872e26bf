"""Acceptance suite: one test per criterion, full stated sizes, exact
symbolic equality everywhere (zero tolerance).  Run with `-s` to see the
per-criterion lines."""

import sys

from superquiver.cli import render_dual_number, somos_terms
from superquiver.frieze import (
    check_diamonds,
    check_glide,
    check_monodromy,
    extract_schrodinger,
    frieze_vs_seed,
    generate,
)
from superquiver.poly import SuperRing
from superquiver.quiver import (
    mutate,
    mutate_weight,
    named_quiver,
    somos4_a,
    somos4_b,
    two_vertex_example,
    weight_function,
)
from superquiver.seed import Seed, mutate_seed
from superquiver.verify import verify_form, verify_laurent, verify_reduction


def _criterion(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {number:02d} {name}: {status}"
    if detail:
        line += f" ({detail})"
    print(line, file=sys.stderr)
    assert ok, line


def test_01_osp_exchange():
    ring = SuperRing(3, 2, even_names=("a", "b", "c"), odd_names=("beta", "alpha"))
    seed = Seed.initial(named_quiver("osp_example"), ring)
    out = mutate_seed(seed, 1)
    a_inv = ring.term(1, (-1, 0, 0))
    b, c = ring.x(2), ring.x(3)
    beta, alpha = ring.odd_gens()
    expected = a_inv * (ring.one + b * c + beta * alpha)
    _criterion(1, "OSp exchange a' = (1+bc+beta*alpha)/a", out.value(1) == expected)


def test_02_two_vertex_mutation_path_counts():
    out = mutate(two_vertex_example(), 1)
    ok = out.path_mult(1, 2, 1) == -1 and out.path_mult(1, 2, 2) == 2
    _criterion(2, "two-odd-vertex example mutates to path counts (-1, 2)", ok)


def test_03_width1_superfrieze():
    ring = SuperRing(1, 2, even_names=("x",), odd_names=("xi", "eta"))
    fr = generate(1, ring=ring)
    x_inv = ring.term(1, (-1,))
    xi, eta = ring.odd_gens()
    ok = fr.f(1, 1) == 2 * x_inv + x_inv * eta * xi
    ok = ok and fr.phi2(3, 3) == eta - 2 * x_inv * xi
    _criterion(3, "width-1 frieze x' = 2/x + eta*xi/x and xi' = eta - 2xi/x", ok)


def test_04_pentagramma():
    ring = SuperRing(2, 3, even_names=("x", "y"), odd_names=("xi", "eta", "zeta"))
    fr = generate(2, ring=ring)
    x, y = ring.even_gens()
    xi, eta, zeta = ring.odd_gens()
    one = ring.one
    xinv = ring.term(1, (-1, 0))
    yinv = ring.term(1, (0, -1))
    xp, yp, xpp = fr.f(1, 1), fr.f(1, 2), fr.f(2, 2)
    checks = [
        xp == xinv * (one + y) + xinv * eta * xi,
        yp == xinv * yinv * (one + x + y + eta * xi) + yinv * zeta * eta,
        xpp == yinv * (one + x + eta * xi) + xi * zeta + x * yinv * zeta * eta,
        fr.phi2(3, 3) == eta - xp * xi,            # xi'
        fr.phi2(3, 5) == zeta - yp * xi,           # eta'
        fr.phi2(3, 7) == -xi,                      # zeta'
        fr.phi2(8, 8) == zeta,                     # xi* = -zeta (sign via glide pair)
        fr.phi2(4, 6) == xi - x * zeta,            # eta*
        fr.phi2(6, 6) == eta - y * zeta,           # zeta*
        fr.phi2(4, 4) == fr.phi2(3, 5) - xpp * fr.phi2(3, 3),  # in-between entry
        fr.phi2(0, 2) == x * eta - y * xi,         # second in-between entry
        fr.phi2(2, 4) == xp * zeta - yp * eta,     # its next-diagonal image
    ]
    _criterion(4, "Pentagramma mirificum entries", all(checks), f"{sum(checks)}/12")


def test_05_laurent_fuzz_1000():
    report = verify_laurent(1000, max_n=5, max_m=4, max_b=2, max_c=2, max_len=8, rng_seed=42)
    _criterion(
        5,
        "Laurent fuzz, 1000 quivers",
        report.ok and report.checked == 1000,
        f"truncated={report.truncated}, {report.elapsed:.1f}s",
    )


def test_06_oracle_equivalence_500():
    report = verify_reduction(500, max_len=6, rng_seed=42)
    _criterion(
        6,
        "classical-route oracle agrees on 500 instances",
        report.ok and report.checked == 500,
        f"truncated={report.truncated}, {report.elapsed:.1f}s",
    )


def test_07_presymplectic_invariance_200():
    report = verify_form(200, max_n=4, max_m=3, rng_seed=42)
    _criterion(
        7,
        "presymplectic invariance + odd-odd vanishing on 200 quivers",
        report.ok and report.checked == 200,
        f"{report.elapsed:.1f}s",
    )


def test_08_somos():
    expected = [1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209]
    # independent oracle: the recurrence itself
    oracle = [1, 1, 1, 1]
    while len(oracle) < 12:
        s1, s2, s3, s4 = oracle[-4:]
        value, rem = divmod(s2 * s4 + s3 * s3, s1)
        assert rem == 0
        oracle.append(value)
    classical = [int(t) for t in somos_terms(12)]
    super_terms = somos_terms(12, super_mode=True)  # raises if not dual numbers
    w_a = weight_function(somos4_a())
    w_b = weight_function(somos4_b())
    rot_a = mutate_weight(w_a, somos4_a().b, 1)
    rot_b = mutate_weight(w_b, somos4_b().b, 1)
    cyclic = lambda w: (w[1], w[2], w[3], w[0])
    ok = (
        classical == expected
        and oracle == expected
        and len(super_terms) == 12
        and cyclic(rot_a) == w_a
        and cyclic(rot_b) == w_b
    )
    _criterion(8, "Somos-4 classical terms, dual-number run, weight rotation", ok)


def test_09_frieze_properties_widths_1_to_4():
    results = []
    for width in (1, 2, 3, 4):
        fr = generate(width)
        ok = check_diamonds(fr) and check_glide(fr)
        sys_ = extract_schrodinger(fr)  # verifies every diagonal recursion
        ok = ok and sys_.period == width + 3
        if width <= 2:
            ok = ok and check_monodromy(fr)
        results.append(ok)
    _criterion(9, "frieze properties widths 1-4 (+monodromy 1-2)", all(results))


def test_10_frieze_vs_seed_widths_1_to_3():
    ok = all(frieze_vs_seed(width) for width in (1, 2, 3))
    _criterion(10, "path-quiver mutation reproduces the frieze, widths 1-3", ok)


def test_11_non_involutivity_witness():
    q = two_vertex_example()
    twice = mutate(mutate(q, 1), 1)
    quiver_ok = (
        q.path_mult(1, 2, 1), q.path_mult(1, 2, 2)) == (1, 1) and (
        twice.path_mult(1, 2, 1), twice.path_mult(1, 2, 2)) == (1, 2)
    seed = Seed.initial(q)
    seed2 = mutate_seed(mutate_seed(seed, 1), 1)
    value_changed = seed2.value(1) != seed.value(1)
    classically_involutive = (
        seed2.value(1).classical_projection() == seed.value(1).classical_projection()
    )
    _criterion(
        11,
        "double mutation: paths (1,1)->(1,2), super value moves, classical limit returns",
        quiver_ok and value_changed and classically_involutive,
    )


def test_12_recorded_walk_replay_server_side():
    # server half of the replay criterion; the client half runs under
    # `npm test` in frontend/ against the same committed fixture
    import json
    import pathlib
    import threading

    from superquiver.replay import record
    from superquiver.server import make_server

    fixture = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "fixtures" / "session_walk.json"
    httpd = make_server(port=0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    host, port = httpd.server_address
    try:
        fresh = record(f"http://{host}:{port}")
    finally:
        httpd.shutdown()
        httpd.server_close()
    recorded = json.loads(fixture.read_text())
    frozen = next(w for w in recorded["walks"] if w["session"] == "osp_example")["steps"][1]
    _criterion(
        12,
        "recorded session walk replays byte-identically; frozen click is a 409",
        fresh == recorded and frozen["status"] == 409,
    )
