import sys

from signed_estrada.cli import main

sys.exit(main())
