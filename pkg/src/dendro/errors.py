class InputError(ValueError):
    """Malformed or inconsistent input (maps to CLI exit code 2)."""
