import sys

from detsched.cli import main

sys.exit(main())
