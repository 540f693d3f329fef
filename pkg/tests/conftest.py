import pytest

# acceptance criterion number -> (title, "PASS"/"FAIL")
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, status = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line("criterion %2d  %-4s  %s" % (n, status, title))


@pytest.fixture(scope="session")
def weyl():
    from crossratio.orthgroup import weyl_image
    return weyl_image()


@pytest.fixture(scope="session")
def points():
    from crossratio import fgeom
    return fgeom.enumerate_points()


@pytest.fixture(scope="session")
def fan():
    from crossratio import toricfan
    return toricfan.build_weyl_fan()
