"""
A small PacMan gridworld with the classic reward structure, split into streams.

Positive stream: pac-dot +10, clearing the maze +500, eating a scared ghost +200.
Negative stream: -1 every frame, colliding with an unscared ghost -500.
"""

from dataclasses import dataclass
from typing import FrozenSet, Tuple

import numpy as np

from split_decision.environments.base import Environment
from split_decision.exceptions import EpisodeFinishedException
from split_decision.models.reward import RewardPair

DOT_REWARD = 10.0
WIN_REWARD = 500.0
GHOST_REWARD = 200.0
STEP_PENALTY = -1.0
DEATH_PENALTY = -500.0

SCARED_FRAMES = 40
GHOST_GREED = 0.8

ACTIONS = ("N", "S", "E", "W", "stay")
MOVES = {0: (-1, 0), 1: (1, 0), 2: (0, 1), 3: (0, -1), 4: (0, 0)}

# '%' wall, '.' pac-dot, 'o' power pellet, 'P' PacMan start, 'G' ghost start, 'C' centre box
DEFAULT_LAYOUT = (
    "%%%%%%%%%",
    "%o.....o%",
    "%.%%.%%.%",
    "%.......%",
    "%.%GCG%.%",
    "%.......%",
    "%.%%.%%.%",
    "%...P...%",
    "%%%%%%%%%",
)

Cell = Tuple[int, int]


def manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


@dataclass(frozen=True)
class Layout:
    """
    A parsed maze.
    """

    rows: int
    cols: int
    walls: FrozenSet[Cell]
    dots: FrozenSet[Cell]
    pellets: FrozenSet[Cell]
    pacman_start: Cell
    ghost_starts: Tuple[Cell, ...]
    center: Cell

    @classmethod
    def parse(cls, lines) -> "Layout":
        """
        Parses a maze drawn with the characters '%', '.', 'o', 'P', 'G', 'C' and ' '.

        Raises:
            ValueError: If the maze is ragged or lacks PacMan.
        """
        lines = [line for line in lines]
        if len({len(line) for line in lines}) != 1:
            raise ValueError("Layout rows must have equal length")

        walls, dots, pellets, ghosts = set(), set(), set(), []
        pacman, center = None, None
        for r, line in enumerate(lines):
            for c, char in enumerate(line):
                cell = (r, c)
                if char == "%":
                    walls.add(cell)
                elif char == ".":
                    dots.add(cell)
                elif char == "o":
                    pellets.add(cell)
                elif char == "P":
                    pacman = cell
                elif char == "G":
                    ghosts.append(cell)
                elif char == "C":
                    center = cell
                elif char != " ":
                    raise ValueError(f"Unknown layout character {char!r}")

        if pacman is None:
            raise ValueError("Layout has no PacMan start")
        if center is None:
            center = ghosts[0] if ghosts else pacman

        return cls(rows=len(lines), cols=len(lines[0]), walls=frozenset(walls), dots=frozenset(dots),
                   pellets=frozenset(pellets), pacman_start=pacman, ghost_starts=tuple(ghosts), center=center)

    @property
    def max_distance(self) -> int:
        return (self.rows - 1) + (self.cols - 1)

    def open_neighbours(self, cell: Cell):
        """
        Returns:
            list: Non-wall cells reachable from cell in one N/S/E/W move.
        """
        result = []
        for action in range(4):
            dr, dc = MOVES[action]
            target = (cell[0] + dr, cell[1] + dc)
            if target not in self.walls and 0 <= target[0] < self.rows and 0 <= target[1] < self.cols:
                result.append(target)
        return result

    def move(self, cell: Cell, action: int) -> Cell:
        """
        Returns:
            tuple: The cell after the move; blocked moves leave the cell unchanged.
        """
        dr, dc = MOVES[action]
        target = (cell[0] + dr, cell[1] + dc)
        if target in self.walls or not (0 <= target[0] < self.rows and 0 <= target[1] < self.cols):
            return cell
        return target


@dataclass(frozen=True)
class PacmanObservation:
    layout: Layout
    pacman: Cell
    ghosts: Tuple[Cell, ...]
    scared: Tuple[bool, ...]
    scared_timer: int
    dots: FrozenSet[Cell]
    pellets: FrozenSet[Cell]
    frame: int


def _nearest(cell: Cell, targets) -> int:
    return min((manhattan(cell, t) for t in targets), default=-1)


def pacman_features(observation: PacmanObservation, initial_dots: int) -> np.ndarray:
    """
    The fixed 8-dimensional context of a PacMan observation, each entry in [0, 1].

    Entries: distance to nearest dot, pellet and ghost (normalised by the
    maze's largest Manhattan distance, 1 when none exists), scared-timer
    fraction, fraction of dots remaining, and three legal-move indicators
    (vertical move open, horizontal move open, junction of three or more exits).
    """
    layout = observation.layout
    scale = float(layout.max_distance)

    def distance_feature(targets):
        nearest = _nearest(observation.pacman, targets)
        return 1.0 if nearest < 0 else nearest / scale

    r, c = observation.pacman
    exits = layout.open_neighbours(observation.pacman)
    vertical = any(cell[1] == c for cell in exits)
    horizontal = any(cell[0] == r for cell in exits)

    return np.array([
        distance_feature(observation.dots),
        distance_feature(observation.pellets),
        distance_feature(observation.ghosts),
        observation.scared_timer / SCARED_FRAMES,
        len(observation.dots) / initial_dots if initial_dots else 0.0,
        float(vertical),
        float(horizontal),
        float(len(exits) >= 3),
    ])


class PacmanEnv(Environment):
    """
    PacMan on a small fixed maze with greedy-stochastic ghosts.
    """

    name = "pacman"
    n_actions = len(ACTIONS)
    better_actions = None

    def __init__(self, rng, layout=DEFAULT_LAYOUT, max_frames=500):
        """
        Initialize a new instance of the PacmanEnv class.

        Args:
            rng (RngStream): Source of the ghosts' moves.
            layout (tuple or Layout, optional): Maze, as strings or parsed.
            max_frames (int, optional): Frames after which an episode is truncated without reward.
        """
        super().__init__(rng)
        self.layout = layout if isinstance(layout, Layout) else Layout.parse(layout)
        self.max_frames = max_frames
        self.initial_dots = len(self.layout.dots)
        self.truncated = False
        self._reset_state()

    def _reset_state(self):
        self.pacman = self.layout.pacman_start
        self.ghosts = list(self.layout.ghost_starts)
        self.scared = [False] * len(self.ghosts)
        self.scared_timer = 0
        self.dots = set(self.layout.dots)
        self.pellets = set(self.layout.pellets)
        self.frame = 0
        self.score = RewardPair()
        self.truncated = False

    def observe(self) -> PacmanObservation:
        return PacmanObservation(
            layout=self.layout,
            pacman=self.pacman,
            ghosts=tuple(self.ghosts),
            scared=tuple(self.scared),
            scared_timer=self.scared_timer,
            dots=frozenset(self.dots),
            pellets=frozenset(self.pellets),
            frame=self.frame,
        )

    def reset(self):
        self._reset_state()
        self._done = False
        return self.observe()

    def state_id(self, observation: PacmanObservation):
        """
        Tabular encoding: (PacMan cell, ghost cells, scared-timer bucket, dots bucket).
        """
        timer = observation.scared_timer
        scared_bucket = 0 if timer == 0 else (1 if timer <= 20 else 2)
        return (observation.pacman, observation.ghosts, scared_bucket, len(observation.dots) // 4)

    def step(self, action):
        """
        Advances one frame.

        Args:
            action (int): Index into ACTIONS (N, S, E, W, stay).

        Returns:
            tuple: (PacmanObservation, RewardPair of this frame's events, done).

        Raises:
            EpisodeFinishedException: If the episode already ended.
        """
        if self._done:
            raise EpisodeFinishedException()
        if not 0 <= action < self.n_actions:
            raise ValueError(f"Invalid action: {action}")

        self.frame += 1
        positive, negative = 0.0, STEP_PENALTY

        # a pellet eaten this frame scares the ghosts for SCARED_FRAMES frames, this one included
        if self.scared_timer > 0:
            self.scared_timer -= 1
            if self.scared_timer == 0:
                self.scared = [False] * len(self.ghosts)

        self.pacman = self.layout.move(self.pacman, action)

        if self.pacman in self.dots:
            self.dots.remove(self.pacman)
            positive += DOT_REWARD

        if self.pacman in self.pellets:
            self.pellets.remove(self.pacman)
            self.scared_timer = SCARED_FRAMES
            self.scared = [True] * len(self.ghosts)

        if not self.dots:
            positive += WIN_REWARD
            self._done = True
        else:
            gained, lost = self._collide()
            positive += gained
            negative += lost

            if not self._done:
                self._move_ghosts()
                gained, lost = self._collide()
                positive += gained
                negative += lost

        if not self._done and self.frame >= self.max_frames:
            self.truncated = True
            self._done = True

        reward = RewardPair(positive, negative)
        self.score = self.score + reward
        return self.observe(), reward, self._done

    def _collide(self):
        gained, lost = 0.0, 0.0
        for index, ghost in enumerate(self.ghosts):
            if ghost != self.pacman:
                continue
            if self.scared[index]:
                gained += GHOST_REWARD
                self.ghosts[index] = self.layout.center
                self.scared[index] = False
            elif not self._done:
                lost += DEATH_PENALTY
                self._done = True
        return gained, lost

    def _move_ghosts(self):
        for index, ghost in enumerate(self.ghosts):
            # scared ghosts move every other frame
            if self.scared[index] and self.frame % 2 == 1:
                continue

            options = self.layout.open_neighbours(ghost)
            if not options:
                continue

            if self._rng.random() < GHOST_GREED:
                distances = [manhattan(cell, self.pacman) for cell in options]
                target = max(distances) if self.scared[index] else min(distances)
                options = [cell for cell, d in zip(options, distances) if d == target]

            self.ghosts[index] = options[int(self._rng.integers(len(options)))]

    def describe(self):
        return {"name": self.name, "max_frames": self.max_frames, "dots": self.initial_dots}
