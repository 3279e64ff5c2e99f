import sys

from quintic_mirror.cli import main

if __name__ == "__main__":
    sys.exit(main())
