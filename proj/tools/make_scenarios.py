#!/usr/bin/env python3
# Copyright (c) 2026 The actopt Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the obstacle grids under scenarios/."""

import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "scenarios"


class Grid:
    def __init__(self, width, height, resolution, origin=(0.0, 0.0)):
        self.w, self.h, self.res = width, height, resolution
        self.ox, self.oy = origin
        self.cells = [["."] * width for _ in range(height)]

    def center(self, col, row):
        return self.ox + col * self.res, self.oy + row * self.res

    def paint(self, inside, ch):
        for row in range(self.h):
            for col in range(self.w):
                x, y = self.center(col, row)
                if inside(x, y) and (ch == "h" or self.cells[row][col] == "."):
                    self.cells[row][col] = ch

    def save(self, name, comment):
        lines = [f"# {comment}",
                 f"grid {self.w} {self.h} {self.res} {self.ox} {self.oy}"]
        lines += ["".join(r) for r in self.cells]  # first row is minimum y
        (OUT / name).write_text("\n".join(lines) + "\n")


def box(x0, x1, y0, y1):
    return lambda x, y: x0 <= x <= x1 and y0 <= y <= y1


def ellipse(cx, cy, ax, ay):
    return lambda x, y: ((x - cx) / ax) ** 2 + ((y - cy) / ay) ** 2 <= 1.0


def empty():
    Grid(100, 60, 0.2).save("empty.grid", "20 x 12 m open ground")


def narrow_gap():
    g = Grid(200, 150, 0.2)
    # fence along x = 20 m with a single gap between y = 14 and 18.5
    g.paint(lambda x, y: abs(x - 20.0) < 0.15 and not 14.0 < y < 18.5, "h")
    # boat hull just past the gap, forcing a sharp turn on exit
    g.paint(ellipse(28.0, 19.5, 1.6, 4.6), "h")
    # brush along the fence
    g.paint(box(15.5, 19.0, 2.0, 9.0), "s")
    g.save("narrow_gap.grid", "fence with one gap and a boat hull just beyond it")


def rock_pile():
    g = Grid(300, 200, 0.2)
    # vegetation ring around a rock core
    g.paint(ellipse(30.0, 21.0, 8.0, 6.5), "s")
    g.paint(ellipse(30.0, 21.0, 5.0, 4.0), "h")
    g.paint(ellipse(34.5, 17.0, 2.0, 1.5), "h")
    g.save("rock_pile.grid", "rock pile covered in vegetation")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    empty()
    narrow_gap()
    rock_pile()
