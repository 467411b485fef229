# Copyright 2026 The rydgate Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end for the rydgate simulator.

Each command takes the same config document as the ``rydgate`` tool (a dict
or a path to a JSON file), writes its CSV/JSON outputs into ``out_dir`` and
returns the summary as a dict.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Sequence, Union

from . import _core
from ._core import (
    ConfigError,
    NumericalError,
    doppler_sigma,
    leakage_oracle,
    single_channel_leakage,
)

__all__ = [
    "ConfigError",
    "NumericalError",
    "simulate",
    "optimize",
    "scan",
    "leakage",
    "doppler_sigma",
    "leakage_oracle",
    "single_channel_leakage",
]

Config = Union[Mapping[str, Any], str, os.PathLike]


def _config_text(config: Config) -> str:
    if isinstance(config, Mapping):
        return json.dumps(config)
    with open(config, encoding="utf-8") as f:
        return f.read()


def _call(fn, config: Config, out_dir, **kwargs) -> dict:
    os.makedirs(out_dir, exist_ok=True)
    return json.loads(fn(_config_text(config), os.fspath(out_dir), **kwargs))


def simulate(config: Config, out_dir=".", threads: int = 1) -> dict:
    return _call(_core.simulate, config, out_dir, threads=threads)


def optimize(config: Config, out_dir=".", threads: int = 1, selftest: bool = False) -> dict:
    return _call(_core.optimize, config, out_dir, threads=threads, selftest=selftest)


def scan(config: Config, out_dir=".", threads: int = 1, axis: str | None = None,
         grid: Sequence[float] = ()) -> dict:
    return _call(_core.scan, config, out_dir, threads=threads, axis=axis, grid=list(grid))


def leakage(config: Config, out_dir=".", threads: int = 1) -> dict:
    return _call(_core.leakage, config, out_dir, threads=threads)
