"""
Utility functions for the polyadic ring toolkit: settings, parsing and formatting.
"""
import ast
import json
import logging
import os
from dataclasses import dataclass, fields
from typing import Optional, Sequence

from padic_core import PAdicError, PAdicInt, from_integer, parse_digit_string

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "POLYADIC_SEED"
EMPTY_CELL_TEXT = "—"
OPTIONAL_SETTINGS = ("n_cap", "seed")


@dataclass
class Settings:
    """Defaults for precision and sampling, overridable by config file, env and flags."""
    precision: int = 16
    samples: int = 100
    n_cap: Optional[int] = None
    seed: Optional[int] = None


def load_settings(config_file: str = "polyadic_config.json") -> Settings:
    """
    Load settings from an optional JSON config file and the environment.

    Args:
        config_file: Path of the JSON file; a missing file means defaults

    Returns:
        Settings with POLYADIC_SEED applied on top of the file

    Raises:
        ValueError: if a setting is not an integer, or POLYADIC_SEED is set but not an integer
    """
    settings = Settings()
    data = {}
    if os.path.exists(config_file):
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError(f"expected a JSON object, got {type(data).__name__}")
        except (OSError, ValueError) as e:
            logger.warning("Failed to read %s, using defaults: %s", config_file, e)
            data = {}
    else:
        logger.debug("Config file %s not found, using defaults", config_file)

    known = {item.name for item in fields(Settings)}
    for key, value in data.items():
        if key not in known:
            logger.warning("Ignoring unknown setting %r in %s", key, config_file)
            continue
        if value is None and key in OPTIONAL_SETTINGS:
            setattr(settings, key, None)
        elif type(value) is int:
            setattr(settings, key, value)
        else:
            raise ValueError(f"setting {key!r} in {config_file} must be an integer, got {value!r}")

    raw_seed = os.environ.get(SEED_ENV_VAR)
    if raw_seed is not None and raw_seed.strip():
        try:
            settings.seed = int(raw_seed)
        except ValueError:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw_seed!r}")
    return settings


def parse_padic_literal(text: str, p: int, precision: int) -> PAdicInt:
    """
    Parse a p-adic literal: a decimal integer or a 'p:N:digits' string.

    Args:
        text: The literal
        p: Expected prime
        precision: Expected number of digits

    Returns:
        The p-adic integer

    Raises:
        PAdicError: on malformed input or a p/N disagreement
    """
    text = text.strip()
    if ":" in text:
        value = parse_digit_string(text)
        if value.p != p or value.precision != precision:
            raise PAdicError(
                f"literal {text!r} is {value.p}-adic with N={value.precision}, "
                f"expected p={p}, N={precision}"
            )
        return value
    try:
        value = int(text)
    except ValueError:
        raise PAdicError(f"not an integer or digit string: {text!r}")
    return from_integer(p, precision, value)


def literal_precision(texts: Sequence[str], default: int) -> int:
    """Precision carried by the 'p:N:digits' literals in `texts`, or `default` if there are none."""
    found = {parse_digit_string(text.strip()).precision for text in texts if ":" in text}
    if len(found) > 1:
        raise PAdicError(f"digit strings disagree on N: {sorted(found)}")
    return found.pop() if found else default


def evaluate_expression(expr: str, p: int, precision: int) -> PAdicInt:
    """
    Evaluate a +, -, * expression over integer literals in Z_p mod p^N.

    Every literal is embedded first and the arithmetic is done digit-wise.

    Raises:
        PAdicError: if the expression uses anything but integers, + - * and parentheses
    """
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as e:
        raise PAdicError(f"cannot parse expression {expr!r}: {e.msg}")

    def walk(node) -> PAdicInt:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return from_integer(p, precision, node.value)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            operand = walk(node.operand)
            return -operand if isinstance(node.op, ast.USub) else operand
        if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            return left * right
        raise PAdicError(f"unsupported element in expression {expr!r}")

    return walk(tree)

