"""
Mission configuration: a versioned YAML or JSON document with units in every key name.

Classes
-------
DebrisEntry : One debris object of the tour, looked up in the catalog.
TourSettings : Tour block without the catalog-dependent debris states.
GuidanceSettings : Law, weights and propagation settings.
TunerSettings : Swarm and simplified-dynamics settings.
MissionConfig : The whole document.

Dependencies
------------
- PyYAML
"""
import json
import logging
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import yaml

from ..astro.environment import AtmosphereTable, Environment, SpacecraftConfig
from ..astro.epochs import parse_epoch
from ..catalog.tle import DebrisRecord, select_records
from ..edelbaum.extended import DEFAULT_SEGMENTS, ExtendedEdelbaumOptions
from ..errors import ConfigError
from ..guidance.weights import LAWS, LegWeights, default_weights
from ..propagator.config import OPEN_LOOP
from ..propagator.throttle import DeadbandThresholds
from ..tour.definition import DAY, OBJECTIVES, DecisionLayout, TourDefinition
from ..tour.optimizer import OptimizerOptions
from ..tuner.fitness import SimplifiedSettings
from ..tuner.swarm import SwarmSettings

logger = logging.getLogger(__name__)

CONFIG_VERSION = 1
TOP_LEVEL_KEYS = ("version", "spacecraft", "environment", "tour", "optimizer", "guidance",
                  "tuner", "output")


def _block(data: Any, where: str, allowed: Sequence[str]) -> Dict[str, Any]:
    """Mapping ``data`` with its keys checked against ``allowed``."""
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"{where} must be a mapping")
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {', '.join(map(str, unknown))}")
    return dict(data)


def _float(block: Dict[str, Any], key: str, where: str, default=None) -> Optional[float]:
    value = block.get(key, default)
    if value is None:
        return None
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{where}.{key} must be a number, got {value!r}") from None


def _int(block: Dict[str, Any], key: str, where: str, default=None) -> Optional[int]:
    value = block.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise ConfigError(f"{where}.{key} must be an integer, got {value!r}")
    return int(value)


def _pair(block: Dict[str, Any], key: str, where: str, default) -> Tuple[float, float]:
    value = block.get(key, default)
    try:
        low, high = (float(v) for v in value)
    except (TypeError, ValueError):
        raise ConfigError(f"{where}.{key} must be a [low, high] pair") from None
    return low, high


def _bool(block: Dict[str, Any], key: str, where: str, default: bool) -> bool:
    value = block.get(key, default)
    if not isinstance(value, bool):
        raise ConfigError(f"{where}.{key} must be true or false")
    return value


def _spacecraft(data: Any) -> SpacecraftConfig:
    where = "spacecraft"
    b = _block(data, where, ("wet_mass_kg", "dry_mass_kg", "max_thrust_n", "isp_s",
                             "duty_ratio", "drag_coefficient", "frontal_area_m2"))
    defaults = SpacecraftConfig()
    return SpacecraftConfig(
        wet_mass=_float(b, "wet_mass_kg", where, defaults.wet_mass),
        max_thrust=_float(b, "max_thrust_n", where, defaults.max_thrust),
        isp=_float(b, "isp_s", where, defaults.isp),
        duty_ratio=_float(b, "duty_ratio", where, defaults.duty_ratio),
        drag_coefficient=_float(b, "drag_coefficient", where, defaults.drag_coefficient),
        frontal_area=_float(b, "frontal_area_m2", where, defaults.frontal_area),
        dry_mass=_float(b, "dry_mass_kg", where))


def _environment(data: Any, base_dir: Path) -> Environment:
    where = "environment"
    b = _block(data, where, ("mu_km3_s2", "re_km", "j2", "g0_m_s2", "atmosphere_csv",
                             "vacuum"))
    defaults = Environment()
    atmosphere = defaults.atmosphere
    if _bool(b, "vacuum", where, False):
        atmosphere = None
    elif b.get("atmosphere_csv"):
        path = Path(b["atmosphere_csv"])
        if not path.is_absolute():
            path = base_dir / path
        try:
            atmosphere = AtmosphereTable.from_csv(path)
        except OSError as exc:
            raise ConfigError(f"cannot read atmosphere table {path}: {exc}") from exc
    return Environment(mu=_float(b, "mu_km3_s2", where, defaults.mu),
                       re=_float(b, "re_km", where, defaults.re),
                       j2=_float(b, "j2", where, defaults.j2),
                       g0=_float(b, "g0_m_s2", where, defaults.g0),
                       atmosphere=atmosphere)


@dataclass(frozen=True)
class DebrisEntry:
    """
    Attributes
    ----------
    key : str
        Catalog id or object name.
    mass : float
        [kg]
    area_coefficient : float, optional
        Cd*A [m^2]; derived from the element-set B* when omitted.
    name : str, optional
        Display name overriding the catalog's.
    """
    key: str
    mass: float
    area_coefficient: Optional[float] = None
    name: Optional[str] = None

    @classmethod
    def from_dict(cls, data: Any, index: int) -> "DebrisEntry":
        where = f"tour.debris[{index}]"
        b = _block(data, where, ("id", "name", "mass_kg", "drag_area_m2"))
        if "id" not in b and "name" not in b:
            raise ConfigError(f"{where} needs an id or a name")
        if "mass_kg" not in b:
            raise ConfigError(f"{where}.mass_kg is required")
        key = str(b["id"]) if "id" in b else str(b["name"])
        return cls(key, _float(b, "mass_kg", where), _float(b, "drag_area_m2", where),
                   b.get("name"))


@dataclass(frozen=True)
class TourSettings:
    """
    Tour block in internal units (s, km, km/s, rad).

    ``initial_guess`` holds one (altitude km, inclination rad) pair per drift orbit.
    """
    debris: Tuple[DebrisEntry, ...]
    launch_epoch: float = 0.0
    objective: str = "fuel"
    tof_max: Optional[float] = None
    dv_max: Optional[float] = None
    shepherd_altitude: float = 350.0
    handover_dwell: float = 30.0 * DAY
    proximity_dwell: float = 45.0 * DAY
    altitude_bounds: Tuple[float, float] = (300.0, 1200.0)
    inclination_bounds: Tuple[float, float] = (math.radians(95.0), math.radians(102.0))
    launch_window: float = 0.0
    debris_decay: bool = True
    n_segments: int = DEFAULT_SEGMENTS
    edelbaum: ExtendedEdelbaumOptions = field(default_factory=ExtendedEdelbaumOptions)
    initial_guess: Tuple[Tuple[float, float], ...] = ()

    @classmethod
    def from_dict(cls, data: Any) -> "TourSettings":
        where = "tour"
        b = _block(data, where, (
            "debris", "launch_epoch", "objective", "tof_max_days", "dv_max_m_s",
            "shepherd_altitude_km", "handover_dwell_days", "proximity_dwell_days",
            "altitude_bounds_km", "inclination_bounds_deg", "launch_window_days",
            "debris_decay", "n_segments", "drag", "eclipses", "constant_mass",
            "initial_guess"))
        debris = b.get("debris")
        if not isinstance(debris, list) or not debris:
            raise ConfigError("tour.debris must be a non-empty list")
        tof_max = _float(b, "tof_max_days", where)
        dv_max = _float(b, "dv_max_m_s", where)
        inc_low, inc_high = _pair(b, "inclination_bounds_deg", where, (95.0, 102.0))
        guess = []
        for k, item in enumerate(b.get("initial_guess") or ()):
            g = _block(item, f"tour.initial_guess[{k}]", ("altitude_km", "inclination_deg"))
            try:
                guess.append((float(g["altitude_km"]), math.radians(float(g["inclination_deg"]))))
            except (KeyError, TypeError, ValueError):
                raise ConfigError(f"tour.initial_guess[{k}] needs numeric altitude_km and "
                                  f"inclination_deg") from None
        edelbaum = ExtendedEdelbaumOptions(
            drag=_bool(b, "drag", where, True), eclipses=_bool(b, "eclipses", where, True),
            constant_mass=_bool(b, "constant_mass", where, False))
        return cls(
            debris=tuple(DebrisEntry.from_dict(d, k) for k, d in enumerate(debris)),
            launch_epoch=parse_epoch(b.get("launch_epoch", 0.0)),
            objective=str(b.get("objective", "fuel")),
            tof_max=None if tof_max is None else tof_max * DAY,
            dv_max=None if dv_max is None else dv_max / 1000.0,
            shepherd_altitude=_float(b, "shepherd_altitude_km", where, 350.0),
            handover_dwell=_float(b, "handover_dwell_days", where, 30.0) * DAY,
            proximity_dwell=_float(b, "proximity_dwell_days", where, 45.0) * DAY,
            altitude_bounds=_pair(b, "altitude_bounds_km", where, (300.0, 1200.0)),
            inclination_bounds=(math.radians(inc_low), math.radians(inc_high)),
            launch_window=_float(b, "launch_window_days", where, 0.0) * DAY,
            debris_decay=_bool(b, "debris_decay", where, True),
            n_segments=_int(b, "n_segments", where, DEFAULT_SEGMENTS),
            edelbaum=edelbaum, initial_guess=tuple(guess))


def _optimizer(data: Any) -> OptimizerOptions:
    where = "optimizer"
    b = _block(data, where, ("multistarts", "seed", "penalty_weight", "max_evaluations",
                             "initial_poll_step", "poll_step", "search_segments",
                             "resolution_tolerance"))
    d = OptimizerOptions()
    return OptimizerOptions(
        multistarts=_int(b, "multistarts", where, d.multistarts),
        seed=_int(b, "seed", where, d.seed),
        penalty_weight=_float(b, "penalty_weight", where, d.penalty_weight),
        max_evaluations=_int(b, "max_evaluations", where, d.max_evaluations),
        initial_poll_step=_float(b, "initial_poll_step", where, d.initial_poll_step),
        poll_step=_float(b, "poll_step", where, d.poll_step),
        search_segments=_int(b, "search_segments", where, d.search_segments),
        resolution_tolerance=_float(b, "resolution_tolerance", where, d.resolution_tolerance))


@dataclass(frozen=True)
class GuidanceSettings:
    """
    Attributes
    ----------
    law : str
        Default law for ``fly``: a guidance law or ``open_loop``.
    weights : dict
        Law name to LegWeights; laws without an entry use the built-in defaults.
    propagation : dict
        Extra PropagationConfig fields (control_step, coast_step, rtol, atol, eclipses,
        log_every, abort_altitude, deadband).
    """
    law: str = "dvlaw"
    weights: Dict[str, LegWeights] = field(default_factory=dict)
    propagation: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Any) -> "GuidanceSettings":
        where = "guidance"
        b = _block(data, where, ("law", "weights", "control_step_s", "coast_step_s", "rtol",
                                 "atol", "eclipses", "log_every", "abort_altitude_km",
                                 "deadband"))
        law = str(b.get("law", "dvlaw"))
        if law == "openloop":
            law = OPEN_LOOP
        if law not in LAWS + (OPEN_LOOP,):
            raise ConfigError(f"guidance.law {law!r} is not a known law")
        weights = {}
        for name, value in _block(b.get("weights"), "guidance.weights", LAWS).items():
            _block(value, f"guidance.weights.{name}", ("down", "up"))
            weights[name] = LegWeights.from_dict(name, value)
        propagation: Dict[str, Any] = {}
        for key, target in (("control_step_s", "control_step"), ("coast_step_s", "coast_step"),
                            ("rtol", "rtol"), ("atol", "atol"),
                            ("abort_altitude_km", "abort_altitude")):
            if key in b:
                propagation[target] = _float(b, key, where)
        if "log_every" in b:
            propagation["log_every"] = _int(b, "log_every", where)
        if "eclipses" in b:
            propagation["eclipses"] = _bool(b, "eclipses", where, True)
        if "deadband" in b:
            db = _block(b["deadband"], "guidance.deadband",
                        ("on_a_km", "on_i_deg", "on_raan_deg", "off_a_km", "off_i_deg",
                         "off_raan_deg"))
            d = DeadbandThresholds()
            propagation["deadband"] = DeadbandThresholds(
                on_a=_float(db, "on_a_km", "guidance.deadband", d.on_a),
                on_i=math.radians(_float(db, "on_i_deg", "guidance.deadband",
                                         math.degrees(d.on_i))),
                on_raan=math.radians(_float(db, "on_raan_deg", "guidance.deadband",
                                            math.degrees(d.on_raan))),
                off_a=_float(db, "off_a_km", "guidance.deadband", d.off_a),
                off_i=math.radians(_float(db, "off_i_deg", "guidance.deadband",
                                          math.degrees(d.off_i))),
                off_raan=math.radians(_float(db, "off_raan_deg", "guidance.deadband",
                                             math.degrees(d.off_raan))))
        return cls(law, weights, propagation)

    def weights_for(self, law: str, objective: str = "fuel") -> LegWeights:
        if law in self.weights:
            return self.weights[law]
        return default_weights(law, objective)


@dataclass(frozen=True)
class TunerSettings:
    swarm_size: int = 50
    iterations: int = 40
    seed: Optional[int] = 0
    swarm: SwarmSettings = field(default_factory=SwarmSettings)
    dynamics: SimplifiedSettings = field(default_factory=SimplifiedSettings)

    @classmethod
    def from_dict(cls, data: Any) -> "TunerSettings":
        where = "tuner"
        b = _block(data, where, ("swarm_size", "iterations", "seed", "inertia", "cognitive",
                                 "social", "velocity_clamp", "step_days", "orbit_samples",
                                 "thrust_factor", "a_scale_km", "i_scale_deg",
                                 "raan_scale_deg"))
        s, d = SwarmSettings(), SimplifiedSettings()
        swarm = SwarmSettings(
            inertia=_float(b, "inertia", where, s.inertia),
            cognitive=_float(b, "cognitive", where, s.cognitive),
            social=_float(b, "social", where, s.social),
            velocity_clamp=_float(b, "velocity_clamp", where, s.velocity_clamp))
        dynamics = SimplifiedSettings(
            step=_float(b, "step_days", where, d.step / DAY) * DAY,
            orbit_samples=_int(b, "orbit_samples", where, d.orbit_samples),
            thrust_factor=_float(b, "thrust_factor", where, d.thrust_factor),
            a_scale=_float(b, "a_scale_km", where, d.a_scale),
            i_scale=_float(b, "i_scale_deg", where, d.i_scale),
            raan_scale=_float(b, "raan_scale_deg", where, d.raan_scale))
        return cls(_int(b, "swarm_size", where, 50), _int(b, "iterations", where, 40),
                   _int(b, "seed", where, 0), swarm, dynamics)


@dataclass(frozen=True)
class MissionConfig:
    """
    A validated mission configuration.

    Attributes
    ----------
    spacecraft : SpacecraftConfig
    environment : Environment
    tour : TourSettings
    optimizer : OptimizerOptions
    guidance : GuidanceSettings
    tuner : TunerSettings
    output_dir : Path
    """
    spacecraft: SpacecraftConfig
    environment: Environment
    tour: TourSettings
    optimizer: OptimizerOptions
    guidance: GuidanceSettings = field(default_factory=GuidanceSettings)
    tuner: TunerSettings = field(default_factory=TunerSettings)
    output_dir: Path = Path("out")
    version: int = CONFIG_VERSION

    @classmethod
    def from_dict(cls, data: Any, base_dir: Union[str, Path] = ".") -> "MissionConfig":
        """
        Raises
        ------
        ConfigError
            On a wrong version, unknown keys, missing values or inconsistent units.
        """
        base_dir = Path(base_dir)
        b = _block(data, "configuration", TOP_LEVEL_KEYS)
        version = b.get("version")
        if version != CONFIG_VERSION:
            raise ConfigError(f"unsupported configuration version {version!r}; "
                              f"expected {CONFIG_VERSION}")
        if "tour" not in b:
            raise ConfigError("configuration needs a tour block")
        output = _block(b.get("output"), "output", ("directory",))
        out_dir = Path(output.get("directory", "out"))
        if not out_dir.is_absolute():
            out_dir = base_dir / out_dir
        return cls(spacecraft=_spacecraft(b.get("spacecraft")),
                   environment=_environment(b.get("environment"), base_dir),
                   tour=TourSettings.from_dict(b["tour"]),
                   optimizer=_optimizer(b.get("optimizer")),
                   guidance=GuidanceSettings.from_dict(b.get("guidance")),
                   tuner=TunerSettings.from_dict(b.get("tuner")),
                   output_dir=out_dir, version=version)

    def with_objective(self, objective: Optional[str]) -> "MissionConfig":
        if objective is None:
            return self
        if objective not in OBJECTIVES:
            raise ConfigError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
        return replace(self, tour=replace(self.tour, objective=objective))

    def with_seed(self, seed: Optional[int]) -> "MissionConfig":
        if seed is None:
            return self
        return replace(self, optimizer=replace(self.optimizer, seed=seed),
                       tuner=replace(self.tuner, seed=seed))

    def with_output_dir(self, directory: Optional[Union[str, Path]]) -> "MissionConfig":
        return self if directory is None else replace(self, output_dir=Path(directory))

    def definition(self, records: Sequence[DebrisRecord]) -> TourDefinition:
        """
        Tour definition with debris states taken from ``records``.

        Raises
        ------
        CatalogParseError
            If a configured debris object is missing from the catalog.
        """
        t = self.tour
        chosen = select_records(records, [entry.key for entry in t.debris])
        debris = []
        for entry, record in zip(t.debris, chosen):
            target = record.to_target(entry.mass, self.environment, entry.area_coefficient)
            if entry.name:
                target = replace(target, name=entry.name)
            debris.append(target)
        return TourDefinition(
            debris=tuple(debris), sc=self.spacecraft, env=self.environment,
            launch_epoch=t.launch_epoch, shepherd_altitude=t.shepherd_altitude,
            handover_dwell=t.handover_dwell, proximity_dwell=t.proximity_dwell,
            objective=t.objective, tof_max=t.tof_max, dv_max=t.dv_max,
            altitude_bounds=t.altitude_bounds, inclination_bounds=t.inclination_bounds,
            launch_window=t.launch_window, debris_decay=t.debris_decay,
            n_segments=t.n_segments, edelbaum=t.edelbaum)

    def initial_guess(self, definition: TourDefinition) -> np.ndarray:
        """Configured drift orbits, or the centre of the box when none are given."""
        layout = definition.layout()
        guess = self.tour.initial_guess
        if not guess:
            return 0.5 * (layout.lower + layout.upper)
        if len(guess) != layout.n_drift:
            raise ConfigError(f"tour.initial_guess has {len(guess)} entries, expected "
                              f"{layout.n_drift}")
        env = definition.env
        offset = 0.0 if layout.has_launch_offset else None
        x0 = DecisionLayout.from_drift_orbits([(env.re + alt, inc) for alt, inc in guess], env,
                                              offset)
        return np.clip(x0, layout.lower, layout.upper)


def load_mission_config(path: Union[str, Path], encoding: str = "utf-8") -> MissionConfig:
    """
    Read a YAML (``.yml``/``.yaml``) or JSON (``.json``) mission configuration.

    Relative paths inside the file resolve against its directory.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding=encoding)
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {path}: {exc}") from exc
    try:
        if path.suffix.lower() == ".json":
            data = json.loads(text)
        else:
            data = yaml.safe_load(text)
    except (yaml.YAMLError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot parse configuration {path}: {exc}") from exc
    config = MissionConfig.from_dict(data, path.parent)
    logger.debug("loaded mission configuration %s (%d debris)", path, len(config.tour.debris))
    return config


def weights_document(weights: Sequence[LegWeights]) -> Dict[str, Any]:
    """The ``guidance.weights`` block for tuned weights, in configuration format."""
    return {"guidance": {"weights": {w.law: w.to_dict() for w in weights}}}


def dump_weights(weights: Sequence[LegWeights], path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(weights_document(weights), f, sort_keys=True)


def load_weights(path: Union[str, Path]) -> List[LegWeights]:
    """LegWeights from a file written by :func:`dump_weights`."""
    try:
        data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read weights {path}: {exc}") from exc
    guidance = GuidanceSettings.from_dict(_block(data, "weights file", ("guidance",))
                                          .get("guidance"))
    return list(guidance.weights.values())
