def pytest_terminal_summary(terminalreporter):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::" in getattr(rep, "nodeid", "") and rep.when == "call":
                reports.append((rep.nodeid.split("::")[-1], outcome))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(reports):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
