"""Verify the built-in degree 4 and 5 tables and print every check."""
import sys

from p2stable.surfcat import verify_catalog


def main() -> int:
    ok = True
    for d in (4, 5):
        rep = verify_catalog(d)
        print(rep.render())
        print()
        ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
