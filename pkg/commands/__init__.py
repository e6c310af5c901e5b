# commands/__init__.py
from commands import listing, rank, run

COMMANDS = (listing, run, rank)
