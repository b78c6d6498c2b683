import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the one-line acceptance verdicts after the run summary."""
    for name, mod in sys.modules.items():
        if name.endswith("test_acceptance"):
            for line in getattr(mod, "ACCEPTANCE_LINES", []):
                terminalreporter.write_line(line)
            break
