import sys

from radii.cli import main

sys.exit(main())
