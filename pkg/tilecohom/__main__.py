import sys

from tilecohom.main import main

sys.exit(main())
