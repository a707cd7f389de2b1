"""Smoke tests for the python bindings; runnable directly or under pytest."""

import math
import sys

import memchan


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def test_entropy_anchors():
    assert approx(memchan.entropy(2, 0.4, 0.5, "sep"), 1.2913146886497209, 1e-12)
    assert approx(memchan.entropy(2, 0.4, 0.5, "ghz"), 1.4047077491554594, 1e-12)


def test_spectrum_values():
    spec = memchan.spectrum(2, 0.4, 0.5, "ghz")
    assert len(spec) == 4
    assert approx(spec[0], 0.67, 1e-12)
    assert approx(sum(spec), 1.0, 1e-12)


def test_closed_form_matches_stream():
    for n in (1, 3, 9):
        assert approx(
            memchan.separable_entropy_closed(n, 0.35, 0.6),
            memchan.entropy(n, 0.35, 0.6, "sep"),
            1e-10,
        )


def test_entropy_gap_and_bounds():
    assert memchan.entropy_gap(2, 0.4, 0.5) < 0
    assert memchan.entropy_gap(2, 0.4, 0.9) > 0
    holevo, per_use = memchan.mutual_info_bound(2, 1.0)
    assert approx(holevo, 1.0, 1e-15)
    assert approx(per_use, 0.5, 1e-15)


def test_critical_memory():
    r = memchan.critical_memory(2, 0.4)
    assert 0.5 < r["mu_c"] < 0.9
    assert r["sign_changes"] == 1
    assert memchan.critical_memory(3, 0.4)["mu_c"] is None


def test_sweep_rows():
    rows = memchan.sweep(3, 0.4, [0.0, 0.5, 1.0], ["sep", "ghz"])
    assert len(rows) == 6
    assert rows[0]["encoding"] == "sep" and rows[3]["encoding"] == "ghz"
    assert all(0 <= row["per_use_bits"] <= 1 for row in rows)


def test_encode_state():
    amps = memchan.encode_state("ghz", 2)
    assert approx(abs(amps[0]), 1 / math.sqrt(2), 1e-12)
    assert amps[1] == 0


def test_entropy_of_spectrum():
    assert approx(memchan.entropy_of_spectrum([0.5, 0.5]), 1.0, 1e-15)


def test_dense_cap_error():
    try:
        memchan.entropy(9, 0.4, 0.5, "B0000000")
    except memchan.DenseCapError:
        pass
    else:
        raise AssertionError("dense cap was not enforced")


def test_invalid_encoding():
    try:
        memchan.entropy(2, 0.4, 0.5, "nope")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid encoding accepted")


def test_verify():
    summary = memchan.verify(n_max=3, samples=50)
    assert summary["passed"] is True
    assert len(summary["suites"]) == 4


def main():
    tests = [(name, fn) for name, fn in sorted(globals().items())
             if name.startswith("test_") and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"[ok] {name}")
        except Exception as exc:  # noqa: BLE001 - report and continue
            failed += 1
            print(f"[FAIL] {name}: {exc}")
    print(f"{len(tests) - failed}/{len(tests)} python smoke tests passed")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
