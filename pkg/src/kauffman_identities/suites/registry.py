# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Suite registry for routing ``verify`` requests to their checks."""

from __future__ import annotations

import logging
from collections.abc import Callable

from kauffman_identities.config import Config
from kauffman_identities.errors import UnknownSuiteError
from kauffman_identities.reports import Report
from kauffman_identities.semigroups.structure import verify_structure_ext_k4, verify_structure_j4
from kauffman_identities.suites import verifications
from kauffman_identities.suites.config import SuiteSettings, SuitesConfig

logger = logging.getLogger(__name__)

ALL = "all"

SuiteRunner = Callable[[SuiteSettings, int, Config], Report]

_RUNNERS: dict[str, SuiteRunner] = {
    "relations": lambda s, _, __: verifications.verify_relations(s.min_rank, s.max_rank),
    "cutting-j4": lambda s, _, __: verifications.verify_cutting_j4(),
    "cutting-k4": lambda s, _, __: verifications.verify_cutting_k4(s.circles),
    "cutting-j6": lambda s, seed, _: verifications.verify_cutting_j6(s.samples, seed),
    "structure-j4": lambda s, _, __: verify_structure_j4(),
    "structure-k4": lambda s, _, __: verify_structure_ext_k4(s.circles),
    "k5-counterexample": lambda s, _, __: verifications.verify_k5_counterexample(),
    "catalan": lambda s, _, config: verifications.verify_catalan(
        s.min_rank, s.max_rank, config.max_jones_rank
    ),
    "checker-oracle": lambda s, seed, _: verifications.verify_checker_oracle(s.corpus, seed),
}


class SuiteRegistry:
    """Looks up verification suites and runs them with their settings."""

    def __init__(self, config: Config | None = None, suites_config: SuitesConfig | None = None):
        """Initialize the registry.

        Args:
            config: Process configuration; supplies the default seed.
            suites_config: Per-suite parameters from suites.yaml.
        """
        self.config = config or Config()
        self.suites_config = suites_config or SuitesConfig()

    def names(self) -> list[str]:
        """Suite names, in the order ``all`` runs them."""
        return [*_RUNNERS, ALL]

    def settings(self, name: str) -> SuiteSettings:
        return self.suites_config.get_suite(name)

    def _seed(self, settings: SuiteSettings) -> int:
        for seed in (settings.seed, self.suites_config.seed):
            if seed is not None:
                return seed
        return self.config.seed

    def run(self, name: str, seed: int | None = None) -> Report:
        """Run a suite, or every enabled suite for ``all``.

        Args:
            name: Suite name.
            seed: Overrides the configured seeds.

        Returns:
            The suite's report.

        Raises:
            UnknownSuiteError: If no suite has that name.
        """
        if name == ALL:
            report = Report(ALL)
            for suite in _RUNNERS:
                if not self.settings(suite).enabled:
                    logger.info("Skipping disabled suite: %s", suite)
                    continue
                report.extend(self.run(suite, seed))
            return report

        runner = _RUNNERS.get(name)
        if runner is None:
            raise UnknownSuiteError(name, self.names())

        settings = self.settings(name)
        effective_seed = seed if seed is not None else self._seed(settings)
        logger.info("Running suite", extra={"suite": name, "seed": effective_seed})
        report = runner(settings, effective_seed, self.config)
        if not report.passed:
            logger.warning("Suite %s failed %d checks", name, len(report.failures))
        return report
