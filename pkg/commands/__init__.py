"""CLI command modules.

This package contains:
- helpers: Exit-code exceptions, argument loading and output helpers
- inspection: Inspection commands (describe, centralize)
- lifting: Lift commands (lift, frobenius)
- verify: Verification suites command (verify)
- setup: Coloured group and help command
"""
