import sys

from mertens_matrices.harness.cli import main

sys.exit(main())
