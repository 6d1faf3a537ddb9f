"""
Quick smoke test for speh-kit
Walks the SpehKit facade end to end on the bundled fixture alphabet
"""

from datetime import datetime
from pathlib import Path

FIXTURE = Path(__file__).parent / "alphabets" / "fixture.json"


def _kit():
    from config import Settings
    from main import SpehKit

    settings = Settings(
        alphabet_path=FIXTURE,
        max_degree=4,
        max_k=3,
        alpha_grid="1/4",
        _env_file=None,
    )
    return SpehKit.from_file(settings=settings)


def test_config():
    """Test configuration loading"""
    print("\n=== Testing Configuration ===")

    from config import get_settings

    settings = get_settings()
    print(f"  ✓ App Name: {settings.app_name}")
    print(f"  ✓ Log level: {settings.effective_log_level}")
    print(f"  ✓ Universe defaults: {settings.universe_defaults()}")

    assert settings.max_k >= 1


def test_alphabet():
    """Test alphabet loading through the facade"""
    print("\n=== Testing Alphabet ===")

    kit = _kit()
    for symbol in kit.alphabet:
        print(f"  ✓ {symbol.id} (degree {symbol.degree}, parity {symbol.parity})")

    assert len(kit.alphabet) == 4


def test_expressions():
    """Test parsing, canonical printing and Langlands data"""
    print("\n=== Testing Expressions ===")

    kit = _kit()
    text = kit.canonical("St(ts,1) x pi(u(St(r0,1),2),1/4) x St(t,1)")
    print(f"  ✓ Canonical: {text}")
    segments = kit.langlands("u(St(r0,2),2)")
    print(f"  ✓ Langlands: {[s.to_text() for s in segments]}")

    assert text == "u(St(t,1),1) x u(St(ts,1),1) x pi(u(St(r0,1),2),1/4)"
    assert len(segments) == 2


def test_distinction():
    """Test verdicts, traces and the derivative ladder"""
    print("\n=== Testing Distinction ===")

    kit = _kit()
    for expr in ["u(St(r0,3),2)", "u(St(r0,2),2)", "St(t,1) x St(ts,1)", "St(t,1)"]:
        print(f"  ✓ {expr}: {'distinguished' if kit.check(expr) else 'not distinguished'}")

    trace = kit.trace("u(St(r0,3),2) x St(r1,2)")
    print(f"  ✓ Trace root: {trace.label()}")
    ladder = kit.derive("u(St(r0,1),3)", ladder=True)
    print(f"  ✓ Ladder: {[r.to_text() for r in ladder]}")
    report = kit.end_cs("St(r0,1)", 2)
    print(f"  ✓ End of series: A={report.pi_a.to_text()} B={report.pi_b.to_text()}")

    assert kit.check("u(St(r0,3),2)")
    assert not kit.check("St(t,1)")
    assert trace.verdict
    assert len(ladder) == 4
    assert report.distinguished_b and not report.distinguished_a


def test_selfcheck():
    """Test the exhaustive self-check on a small universe"""
    print("\n=== Testing Self-Check ===")

    kit = _kit()
    spec = kit.universe()
    count = sum(1 for _ in kit.enumerate(spec))
    print(f"  ✓ Universe: {spec.to_dict()} ({count} reps)")

    report = kit.selfcheck(spec)
    print(f"  ✓ Properties: {len(report.properties)}, success: {report.success}")
    mutated = kit.selfcheck(spec, inject_parity_flip="r0")
    print(f"  ✓ Parity flip caught: {mutated.counterexamples} counterexamples")

    assert report.success
    assert report.representations == count
    assert not mutated.success


def run_tests():
    """Run all tests"""
    print("=" * 50)
    print("speh-kit - Smoke Test")
    print("=" * 50)
    print(f"Time: {datetime.now().isoformat()}")

    tests = [
        ("Configuration", test_config),
        ("Alphabet", test_alphabet),
        ("Expressions", test_expressions),
        ("Distinction", test_distinction),
        ("Self-Check", test_selfcheck),
    ]

    passed = 0
    failed = 0

    for name, test_fn in tests:
        try:
            test_fn()
            passed += 1
        except Exception as e:
            print(f"\n  ✗ {name} FAILED: {e}")
            failed += 1

    # Summary
    print("\n" + "=" * 50)
    print(f"Results: {passed} passed, {failed} failed")
    print("=" * 50)

    if failed == 0:
        print("\nAll checks passed.")
        print("\nNext steps:")
        print("  1. ./speh-kit check --alphabet alphabets/fixture.json \"u(St(r0,1),2)\"")
        print("  2. ./speh-kit selfcheck --alphabet alphabets/fixture.json")

    return failed == 0


if __name__ == "__main__":
    run_tests()
