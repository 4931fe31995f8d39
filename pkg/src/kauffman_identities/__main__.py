# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Entry point for the kauffman-identities command."""

import logging
import sys

from kauffman_identities.cli import EXIT_USAGE, run
from kauffman_identities.config import load_config


def main() -> int:
    """Main entry point."""
    logging.basicConfig(
        level=logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logger = logging.getLogger(__name__)

    try:
        config = load_config()
        logging.getLogger().setLevel(config.log_level)
        logger.info(
            "Starting kauffman-identities",
            extra={"seed": config.seed, "max_jones_rank": config.max_jones_rank},
        )
        return run(sys.argv[1:], config)

    except Exception as e:
        logger.exception("Command failed: %s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
