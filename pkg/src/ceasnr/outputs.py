"""CSV, manifest and SVG writers for experiment results."""

import datetime
import json
import math
import os
import tempfile
from xml.sax.saxutils import escape

from . import __version__

SWEEP_HEADER = "axis,snr_before_db,snr_after_db,improvement_db,ci_halfwidth_db"
RESISTOR_HEADER = "r_ohm,base_current_a,thermal_rms_v,shot_rms_a"


def fmt(value):
    """Six significant digits, or the value itself for labels."""
    if isinstance(value, str):
        return value
    v = float(value)
    if v == 0:
        return "0"  # no "-0"
    return f"{v:.6g}"


def sweep_csv(result):
    lines = [SWEEP_HEADER]
    for r in result.rows:
        fields = (r.axis_value, r.snr_before_db, r.snr_after_db, r.improvement_db, r.ci_halfwidth_db)
        lines.append(",".join(fmt(v) for v in fields))
    return "\n".join(lines) + "\n"


def resistor_csv(rows):
    lines = [RESISTOR_HEADER]
    for r in rows:
        lines.append(",".join(fmt(v) for v in (r.resistance_ohm, r.base_current_amp, r.thermal_rms_volt, r.shot_rms_amp)))
    return "\n".join(lines) + "\n"


def response_csv(freqs, response):
    lines = ["freq_hz,magnitude_db,phase_deg"]
    for f, h in zip(freqs, response):
        mag = abs(h)
        db = 20 * math.log10(mag) if mag > 0 else -math.inf
        lines.append(f"{fmt(f)},{fmt(db) if math.isfinite(db) else '-inf'},{fmt(math.degrees(math.atan2(h.imag, h.real)))}")
    return "\n".join(lines) + "\n"


def atomic_write(path, text):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def manifest(config_echo, seed, command):
    return {
        "tool_version": __version__,
        "command": command,
        "seed": int(seed),
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        "config_echo": config_echo,
    }


def manifest_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def sweep_svg(result, width=640, height=400, title=None):
    """Before/after SNR against the sweep axis as a bare-bones SVG line plot."""
    rows = result.rows
    numeric = all(isinstance(r.axis_value, (int, float)) for r in rows)
    xs = [float(r.axis_value) for r in rows] if numeric else list(range(len(rows)))
    series = {
        "before": [r.snr_before_db for r in rows],
        "after": [r.snr_after_db for r in rows],
    }
    ys = series["before"] + series["after"]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    pad_y = max((y1 - y0) * 0.1, 1.0)
    y0, y1 = y0 - pad_y, y1 + pad_y
    left, right, top, bottom = 60, 20, 30, 50

    def px(x):
        return left + (x - x0) / (x1 - x0) * (width - left - right)

    def py(y):
        return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{left}" y1="{height - bottom}" x2="{width - right}" y2="{height - bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" stroke="black"/>',
    ]
    for x, r in zip(xs, rows):
        out.append(f'<text x="{px(x):.1f}" y="{height - bottom + 16}" text-anchor="middle">{escape(fmt(r.axis_value))}</text>')
    for frac in (0.0, 0.5, 1.0):
        y = y0 + frac * (y1 - y0)
        out.append(f'<text x="{left - 6}" y="{py(y) + 4:.1f}" text-anchor="end">{y:.1f}</text>')
    out.append(f'<text x="{(width + left - right) / 2:.1f}" y="{height - 12}" text-anchor="middle">{escape(result.axis_name)}</text>')
    out.append(f'<text x="14" y="{(height - bottom + top) / 2:.1f}" transform="rotate(-90 14 {(height - bottom + top) / 2:.1f})" text-anchor="middle">SNR (dB)</text>')
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="18" text-anchor="middle">{escape(title)}</text>')
    colors = {"before": "#1f77b4", "after": "#d62728"}
    for i, (name, vals) in enumerate(series.items()):
        pts = " ".join(f"{px(x):.1f},{py(y):.1f}" for x, y in zip(xs, vals))
        out.append(f'<polyline fill="none" stroke="{colors[name]}" stroke-width="2" points="{pts}"/>')
        ly = top + 14 * i
        out.append(f'<line x1="{width - 130}" y1="{ly}" x2="{width - 110}" y2="{ly}" stroke="{colors[name]}" stroke-width="2"/>')
        out.append(f'<text x="{width - 104}" y="{ly + 4}">{name} filter</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
