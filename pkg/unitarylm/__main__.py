import sys

from unitarylm.cli.main import main

sys.exit(main())
