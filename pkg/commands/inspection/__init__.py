"""
Inspection command module.

Provides commands for inspecting root data and centralisers of semisimple classes.

Structure:
- describe.py: Root datum summary (1 command)
- centralize.py: Centraliser of a semisimple class, optional certificate and oracle (1 command)
"""

from .describe import describe_command
from .centralize import centralize_command

__all__ = [
    'describe_command',
    'centralize_command',
]
