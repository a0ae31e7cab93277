#!/usr/bin/env python3
"""
Setup check for the NulLA certificate engine
Run this to confirm dependencies and configuration before a long sweep
"""

import os


def test_imports():
    """Test if all required modules can be imported"""
    print("🔍 Testing module imports...")

    for name in ("dotenv", "pydantic", "tqdm", "sympy"):
        try:
            __import__(name)
            print(f"✅ {name} - OK")
        except ImportError as e:
            print(f"❌ {name} - FAILED: {e}")
            return False

    for name in ("settings", "poly", "graphs", "oracles", "encoders", "linsolve", "nulla", "enumcert", "nulla_cli"):
        try:
            __import__(name)
            print(f"✅ {name} - OK")
        except ImportError as e:
            print(f"❌ {name} - FAILED: {e}")
            return False

    return True


def test_environment():
    """Report the guard values the engine will run with"""
    print("\n🔍 Testing environment setup...")

    if os.path.exists(".env"):
        print("✅ .env file found")
    else:
        print("⚠️  .env file not found, using built-in defaults")
        print("   Copy env_template.txt to .env to change them")

    import settings
    print(f"   oracle guards: {settings.MAX_VERTICES} vertices, {settings.MAX_EDGES} edges, "
          f"{settings.MAX_ASSIGNMENTS} assignments")
    print(f"   column cap: {settings.MAX_COLUMNS}, log level: {settings.LOG_LEVEL}")

    if settings.MAX_COLUMNS < 1000:
        print("⚠️  NULLA_MAX_COLUMNS is very small; most solves will be refused")
        return False
    return True


def test_basic_functionality():
    """Certify the triangle has no independent pair and verify it"""
    print("\n🔍 Testing basic functionality...")

    try:
        from encoders import encode_independent_set
        from graphs import complete_graph
        from nulla import nulla_solve, verify_certificate

        system = encode_independent_set(complete_graph(3), 2)
        result = nulla_solve(system, 2)
        if result.degree == 1 and verify_certificate(system, result.certificate):
            print("✅ Degree-1 certificate for the triangle - OK")
        else:
            print("❌ Triangle certificate - FAILED")
            return False

    except Exception as e:
        print(f"❌ Basic functionality test - FAILED: {e}")
        return False

    return True


def test_samples():
    """Sample graphs parse (optional)"""
    print("\n🔍 Testing sample graphs...")

    try:
        from graphs import read_graph

        folder = os.path.join(os.path.dirname(os.path.abspath(__file__)), "samples")
        for name in sorted(os.listdir(folder)):
            graph = read_graph(os.path.join(folder, name))
            print(f"✅ {name}: {graph.n} vertices, {graph.edge_count} edges")
    except Exception as e:
        print(f"⚠️  Sample graphs - SKIPPED: {e}")

    return True


def main():
    """Run all checks"""
    print("🧮 NulLA certificate engine - Setup Test")
    print("=" * 50)
    print()

    all_tests_passed = True

    if not test_imports():
        all_tests_passed = False

    if not test_environment():
        all_tests_passed = False

    if not test_basic_functionality():
        all_tests_passed = False

    test_samples()  # This one is optional

    print("\n" + "=" * 50)

    if all_tests_passed:
        print("🎉 All critical checks passed!")
        print("\nNext steps:")
        print("1. Run: python demo.py")
        print("2. Run the quick test suite: pytest -m \"not slow\"")
        print("3. Solve your own graph: nulla solve --graph samples/k5.el --problem matching-v1")
    else:
        print("❌ Some checks failed!")
        print("\nCommon solutions:")
        print("- Run: pip install -r requirements.txt")
        print("- Check your .env file configuration")
        print("- Make sure all modules are in the same directory")

    return all_tests_passed


if __name__ == "__main__":
    main()
