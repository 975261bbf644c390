class CliError(Exception):
    """Base exception for the experiment runner."""
    exit_code = 1


class UsageError(CliError):
    """Bad flags, a bad config file or parameters outside an operation's domain."""
    exit_code = 1


class VerificationFailed(CliError):
    """At least one oracle cross-check or sanity check failed."""
    exit_code = 3

    def __init__(self, message: str, failures=None):
        super().__init__(message)
        self.failures = list(failures or [])
