import os
import shutil
import tempfile
import unittest

import numpy as np

from combinatorics.coloring import Coloring
from witnesses.kinds import KindSpec
from witnesses.verify import refute, verify_witness


def random_coloring(ground, colors, rng):
    return Coloring(ground, rng.integers(0, colors, size=ground.size), colors)


class WorkbenchTestCase(unittest.TestCase):

    def assertWitnessValid(self, spec: KindSpec, size: int, d: Coloring, w):
        self.assertIsNotNone(w, 'no witness for {} at size {}'.format(spec.label, size))
        self.assertTrue(verify_witness(spec, size, d, w),
                        'witness check failed\n{}\n{}'.format(w, d.to_digits()))

    def assertBadColoring(self, spec: KindSpec, size: int, d: Coloring):
        self.assertEqual(d.ground, spec.ground(size))
        w = refute(spec, size, d)
        self.assertIsNone(w, 'colouring {} admits {}'.format(d.to_digits(), w))


class TempDirTestCase(WorkbenchTestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp(prefix='hjwb-')
        self.rng = np.random.default_rng(7)

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def path(self, *parts):
        return os.path.join(self.tmp, *parts)
