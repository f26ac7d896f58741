"""Keep the package docstring example honest."""

import doctest

import noncross


def test_package_docstring_examples():
    results = doctest.testmod(noncross, verbose=False)
    assert results.attempted > 0
    assert results.failed == 0
