from quantlab.vlab.cli import main

raise SystemExit(main())
