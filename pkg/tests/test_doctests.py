import doctest

import pytest

from golomb_lab import nt_core, orbit_closures, periodic_sets, posets, verify


@pytest.mark.parametrize("module", [nt_core, periodic_sets, orbit_closures, posets, verify])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.failed == 0
