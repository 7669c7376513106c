class UsageError(Exception):
    """Bad request: unknown component, malformed file, bad flag value."""
