"""
Quick start script - run the differential self-check from the command line
"""
import subprocess
import sys


def main():
    print("🚀 Running chromatic polynomial self-check")
    print("=" * 60)
    print()
    print("This compares, on every small instance:")
    print("  • closed forms for complete graphs, trees and forests")
    print("  • the blow-up pipeline against brute-force enumeration")
    print("  • naive vs blown-up deletion-contraction")
    print()
    print("=" * 60)
    print()

    try:
        result = subprocess.run([sys.executable, '-m', 'src.cli', 'selfcheck', *sys.argv[1:]])
        sys.exit(result.returncode)
    except KeyboardInterrupt:
        print("\n\n✅ Self-check stopped")
    except Exception as e:
        print(f"\n❌ Error: {e}")
        print("\nMake sure you've installed requirements:")
        print("  pip install -r requirements.txt")


if __name__ == "__main__":
    main()
