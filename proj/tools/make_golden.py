#!/usr/bin/env python3
# Copyright 2026 The Authors.
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
"""Writes scenarios/team_40_robots.json, the 40-robot golden scenario."""

import argparse
import json

BLUE = [3, 1, 2, 5]
RED = [2, 5, 4, 0]


def build(args):
    robots = []
    cols = 8
    for i in range(40):
        r, c = divmod(i, cols)
        caps = BLUE if i < 12 else RED
        robots.append({
            "id": i,
            "position": [args.spacing * (c - (cols - 1) / 2),
                         args.spacing * (r - 2)],
            "capabilities": caps,
        })
    t2_path = [
        [0, args.t2_start],
        [args.move_start, args.t2_start],
        [args.move_end, args.t2_end],
    ]
    tasks = [
        {"id": 1, "position": args.t1, "importance": args.v1,
         "requirement": args.w1, "explored": False},
        {"id": 2, "position": args.t2_start, "importance": args.v2,
         "requirement": args.w2, "explored": False, "path": t2_path},
        {"id": 3, "position": args.t3, "importance": args.v3,
         "requirement": args.w3, "explored": False,
         "appear_time": args.appear},
    ]
    params = {
        "o": 4, "sensing_category": 0, "r_c": args.r_c, "l": args.l,
        "alpha": 1.0, "v_unknown": 50.0, "gamma": 1.0, "k_p": 1.0,
        "dt": 0.05, "u_max": 1.0, "horizon": args.horizon, "seed": 1,
        "realloc_period": 50, "snapshot_period": 100,
    }
    return {"params": params, "robots": robots, "tasks": tasks}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    vec = lambda s: [float(x) for x in s.split(",")]
    p.add_argument("--out", default="scenarios/team_40_robots.json")
    p.add_argument("--spacing", type=float, default=1.0)
    p.add_argument("--r-c", dest="r_c", type=float, default=4.0)
    p.add_argument("--l", type=float, default=2.0)
    p.add_argument("--horizon", type=int, default=6000)
    p.add_argument("--t1", type=vec, default=[-7.0, -1.0])
    p.add_argument("--t2-start", type=vec, default=[0.0, 5.0])
    p.add_argument("--t2-end", type=vec, default=[0.0, 19.0])
    p.add_argument("--t3", type=vec, default=[7.0, -5.0])
    p.add_argument("--v1", type=float, default=10.0)
    p.add_argument("--v2", type=float, default=1.0)
    p.add_argument("--v3", type=float, default=8.0)
    p.add_argument("--w1", type=vec, default=[28, 44, 40, 20])
    p.add_argument("--w2", type=vec, default=[25, 43, 38, 15])
    p.add_argument("--w3", type=vec, default=[28, 44, 40, 20])
    p.add_argument("--appear", type=int, default=800)
    p.add_argument("--move-start", dest="move_start", type=int, default=2500)
    p.add_argument("--move-end", dest="move_end", type=int, default=4000)
    args = p.parse_args()
    with open(args.out, "w") as f:
        json.dump(build(args), f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
