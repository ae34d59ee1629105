import sys

from stickgraph.cli import main

sys.exit(main())
