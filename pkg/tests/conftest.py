import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="include the multi-minute emptiness sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="pass --long to run this sweep")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
