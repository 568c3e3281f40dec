#!/usr/bin/env python3
"""
Example script demonstrating how to use the split_decision package.
"""

import json
import logging
import os
import sys

# Add the parent directory to the Python path so we can import the package
parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, parent_dir)

from split_decision import ExperimentConfig, ExperimentRunner, average_wins, learning_curves, pairwise_wins

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler(sys.stdout)]
)
logger = logging.getLogger(__name__)

def main():
    """Main function to demonstrate the split_decision package."""

    # Load configuration from config.json
    try:
        config_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.json')
        logger.info(f"Loading configuration from {config_path}")
        with open(config_path, 'r') as config_file:
            config = ExperimentConfig.from_dict(json.load(config_file)['Experiment'])
        logger.info("Configuration loaded successfully")
    except Exception as e:
        logger.error(f"Failed to load configuration: {e}")
        sys.exit(1)

    try:
        with ExperimentRunner(config, logger) as runner:
            # Iowa Gambling Task, every agent on the same deck draws
            results = runner.run(progress=True)
            logger.info(f"Finished {len(results)} runs")

            for curve in learning_curves(results, "cumulative_reward", config.agents):
                logger.info(f"{curve.agent}: final cumulative reward {curve.mean[-1]:.2f} +/- {curve.se[-1]:.2f}")

            # Share of draws from the good decks (C, D) over the last 100 draws
            for curve in learning_curves(results, "better_action", config.agents):
                logger.info(f"{curve.agent}: good decks in the last 100 draws {curve.mean[-100:].mean():.1%}")

            matrix = pairwise_wins(results, config.agents)
            for agent, rate in average_wins(matrix).items():
                logger.info(f"{agent}: average win rate {rate:.3f}")

            # Re-run one cell; it must match the recorded run exactly
            replayed = runner.run_cell(0, config.agents[0], 0)
            logger.info(f"Replay of {replayed}: {'identical' if replayed.same_as(results[0]) else 'DIFFERENT'}")

    except Exception as e:
        logger.error(f"Error: {e}", exc_info=True)
        sys.exit(1)

    logger.info("Example completed successfully")

if __name__ == "__main__":
    main()
