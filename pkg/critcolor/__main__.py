from critcolor.main import main

raise SystemExit(main())
