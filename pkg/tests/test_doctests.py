import doctest

import pytest

import sqzero.classes
import sqzero.weightfn


@pytest.mark.parametrize("module", [sqzero.classes, sqzero.weightfn])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.attempted > 0 and result.failed == 0
