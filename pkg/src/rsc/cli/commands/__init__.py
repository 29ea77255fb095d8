"""Command implementations for the rsc CLI."""
