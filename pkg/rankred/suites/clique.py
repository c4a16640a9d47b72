from math import comb
from typing import Iterator, Optional, Tuple

from rankred.graphs.generators import complete_graph
from rankred.reductions.clique import (
    CliqueGadget,
    build_clique_gadget,
    classify,
    clique_to_pvc,
    is_nice,
    nicify,
    preprocess_clique_instance,
    pvc_to_clique,
)
from rankred.reductions.ip_lemma import ip_lemma_enumerate
from rankred.reductions.konig import coverage
from rankred.solvers.enumeration import find_clique
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import CLIQUE_SUITE_SAMPLES, MIN_CLIQUE_GADGET_ELL
from rankred.utils.exceptions import CertificateError

Sample = Tuple[str, Optional[int]]


class CliqueClaimsSuite(AcceptanceSuite):
    """
    Gadget for K6 padded to K6 + 3 K4 (102 gadget vertices, k = 42). The planted clique
    must give a cover of exactly ||G|| - 15 = 168 edges that decodes back to it and whose
    classified tuple is the integer program optimum. Random k-subsets must survive nicify
    with their coverage accounted for exactly.
    """

    name = "clique-claims"
    description = "clique gadget: planted cover, nicify and coverage accounting"
    properties = (
        "planted-cover",
        "planted-round-trip",
        "planted-ip-optimum",
        "nicify-monotone",
        "nice-output",
        "coverage-identity",
        "threshold-bound",
        "decode-sound",
    )

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        ell = MIN_CLIQUE_GADGET_ELL
        h, _ = preprocess_clique_instance(complete_graph(ell), ell)
        self.gadget: CliqueGadget = build_clique_gadget(h, ell)
        self.clique = find_clique(h, ell, self.cap)
        if self.clique is None:
            raise CertificateError(f"The padded instance lost its planted {ell}-clique")

    def generate(self) -> Iterator[Sample]:
        yield "planted", None
        for i in range(CLIQUE_SUITE_SAMPLES):
            yield "sample", i

    def describe(self, instance: Sample) -> str:
        kind, i = instance
        return f"clique gadget K6+3K4 {kind}" + ("" if i is None else f" #{i} seed={self.seed}")

    def check(self, instance: Sample):
        gad = self.gadget
        if instance[0] == "planted":
            planted = self.compute("planted-cover", instance, lambda: clique_to_pvc(gad, self.clique))
            if planted is None:
                return
            self.expect(
                "planted-cover",
                instance,
                lambda: len(planted) == gad.k and coverage(gad.g, planted) == gad.g.size - comb(gad.ell, 2),
            )
            self.expect("planted-round-trip", instance, lambda: pvc_to_clique(gad, planted) == self.clique)
            self.expect(
                "planted-ip-optimum",
                instance,
                lambda: classify(gad, planted).as_ip_tuple() in ip_lemma_enumerate(gad.ell),
            )
            return

        x = frozenset(int(v) for v in self.rng.choice(gad.g.vertex_count, size=gad.k, replace=False))
        nice = self.compute("nicify-monotone", instance, lambda: nicify(gad, x))
        if nice is None:
            return
        self.expect("nicify-monotone", instance, lambda: coverage(gad.g, nice) >= coverage(gad.g, x))
        self.expect("nice-output", instance, lambda: is_nice(gad, nice) and len(nice) == gad.k)
        self.expect(
            "coverage-identity",
            instance,
            lambda: coverage(gad.g, nice) == gad.g.size - classify(gad, nice).uncovered,
        )
        self.expect("threshold-bound", instance, lambda: coverage(gad.g, nice) <= gad.threshold)

        def decode_sound() -> bool:
            found = pvc_to_clique(gad, x)
            return found is None or gad.source.is_clique(found)

        self.expect("decode-sound", instance, decode_sound)
