from rooted_turan.cli import main
import sys

sys.exit(main())
