import random

from gsp4_local_zeta import PlaceData, SatakeData, verify
from gsp4_local_zeta.sampling import ParameterSample, sample_rational


############################################################################################
#
# random_walk
#   Walks the Satake parameters: each step multiplies one root by a random
#   rational, and every point on the walk is checked against the closed form.
#
############################################################################################


class RandomWalk:
    def __init__(self, seed: int, q: int = 49):
        self.rng = random.Random(seed)
        self.roots = [1, 1, 1]
        self.q = q

    def step(self) -> ParameterSample:
        i = self.rng.randrange(3)
        self.roots[i] = self.roots[i] * sample_rational(self.rng, bound=4)
        satake = SatakeData.from_roots(*self.roots)
        omega = satake.omega.constant_term()
        nu = sample_rational(self.rng)
        while nu * nu == omega:
            nu = sample_rational(self.rng)
        return ParameterSample(satake, PlaceData.from_values(self.q, 1, nu))


if __name__ == "__main__":

    walk = RandomWalk(seed=1)
    for n in range(10):
        sample = walk.step()
        report = verify("split", "univariate", order=8, sample=sample)
        print("step {:2d}: {}  {}".format(n, "PASS" if report.passed else "FAIL", sample.params()))
