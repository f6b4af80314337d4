"""SVG drawing of the fundamental domain with the special-value points marked."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .special_values import table

WIDTH, HEIGHT = 800, 600
RE_MIN, RE_MAX = -1.5, 1.5
IM_MIN, IM_MAX = 0.0, 4.5
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 30, 30, 40, 50

SVG_NS = "http://www.w3.org/2000/svg"


def to_px(re: float, im: float):
    w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    x = MARGIN_LEFT + w * (re - RE_MIN) / (RE_MAX - RE_MIN)
    y = MARGIN_TOP + h * (1.0 - (im - IM_MIN) / (IM_MAX - IM_MIN))
    return x, y


def figure_label(descriptor: str) -> str:
    """Write ``1/2 + X`` the way the plot labels it, as ``X + 1/2``."""
    if descriptor.startswith("1/2 + "):
        return descriptor[len("1/2 + "):] + " + 1/2"
    return descriptor


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _sub(parent, tag, text=None, **attrs):
    el = ET.SubElement(parent, tag, {k.rstrip("_").replace("_", "-"): str(v) for k, v in attrs.items()})
    if text is not None:
        el.text = text
    return el


def build_svg() -> ET.Element:
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": str(WIDTH),
            "height": str(HEIGHT),
            "viewBox": f"0 0 {WIDTH} {HEIGHT}",
            "font-family": "serif",
            "font-size": "12",
        },
    )
    _sub(root, "title", "Fundamental domain of SL(2,Z) with special points")
    _sub(root, "rect", x=0, y=0, width=WIDTH, height=HEIGHT, fill="white")

    # shaded domain: walls from the arc up to the top edge, closed along the arc
    x_l, y_top = to_px(-0.5, IM_MAX)
    x_r, _ = to_px(0.5, IM_MAX)
    x_al, y_a = to_px(-0.5, math.sqrt(3) / 2)
    x_ar, _ = to_px(0.5, math.sqrt(3) / 2)
    rx = to_px(1.0, 0)[0] - to_px(0.0, 0)[0]
    ry = to_px(0, 0)[1] - to_px(0, 1.0)[1]
    region = (
        f"M {_fmt(x_l)} {_fmt(y_top)} L {_fmt(x_al)} {_fmt(y_a)} "
        f"A {_fmt(rx)} {_fmt(ry)} 0 0 1 {_fmt(x_ar)} {_fmt(y_a)} "
        f"L {_fmt(x_r)} {_fmt(y_top)} Z"
    )
    _sub(root, "path", d=region, fill="#eef3fb", stroke="none", class_="domain")

    # full unit semicircle, faint, then the arc bounding the domain
    x0, y0 = to_px(-1.0, 0.0)
    x1, _ = to_px(1.0, 0.0)
    _sub(root, "path", d=f"M {_fmt(x0)} {_fmt(y0)} A {_fmt(rx)} {_fmt(ry)} 0 0 1 {_fmt(x1)} {_fmt(y0)}",
         fill="none", stroke="#999999", stroke_dasharray="4 3", class_="unit-circle")
    _sub(root, "path", d=f"M {_fmt(x_al)} {_fmt(y_a)} A {_fmt(rx)} {_fmt(ry)} 0 0 1 {_fmt(x_ar)} {_fmt(y_a)}",
         fill="none", stroke="black", stroke_width=2, class_="arc")

    for re in (-0.5, 0.5):
        xa, ya = to_px(re, math.sqrt(3) / 2)
        xb, yb = to_px(re, IM_MAX)
        _sub(root, "line", x1=_fmt(xa), y1=_fmt(ya), x2=_fmt(xb), y2=_fmt(yb),
             stroke="black", stroke_width=2, class_="wall")

    # axes
    xa, ya = to_px(RE_MIN, 0.0)
    xb, _ = to_px(RE_MAX, 0.0)
    _sub(root, "line", x1=_fmt(xa), y1=_fmt(ya), x2=_fmt(xb), y2=_fmt(ya), stroke="black", class_="axis")
    xi, yi0 = to_px(0.0, 0.0)
    _, yi1 = to_px(0.0, IM_MAX)
    _sub(root, "line", x1=_fmt(xi), y1=_fmt(yi0), x2=_fmt(xi), y2=_fmt(yi1),
         stroke="#666666", stroke_dasharray="2 3", class_="axis")

    ticks = [
        (-1.5, "−3/2"), (-math.sqrt(2) / 2, "−√2/2"), (-math.sqrt(3) / 3, "−√3/3"), (0.0, "0"),
        (math.sqrt(3) / 3, "√3/3"), (math.sqrt(2) / 2, "√2/2"), (1.5, "3/2"),
    ]
    for k, (re, text) in enumerate(ticks):
        x, y = to_px(re, 0.0)
        _sub(root, "line", x1=_fmt(x), y1=_fmt(y), x2=_fmt(x), y2=_fmt(y + 6), stroke="black", class_="tick")
        # the two inner pairs sit 0.13 apart; stagger their labels
        dy = 32 if k in (2, 4) else 20
        _sub(root, "text", text, x=_fmt(x), y=_fmt(y + dy), text_anchor="middle", class_="tick-label")

    markers = _sub(root, "g", class_="markers")
    for e in table():
        label = figure_label(e.tau_descriptor)
        if e.tau.imag <= IM_MAX:
            x, y = to_px(e.tau.real, e.tau.imag)
            _sub(markers, "circle", cx=_fmt(x), cy=_fmt(y), r=4, fill="black", class_="marker")
        else:
            # off-scale: pin to the top edge and say where it really is
            x, y = to_px(e.tau.real, IM_MAX)
            y -= 4 + 12 * (e.order_index - 17)
            _sub(markers, "circle", cx=_fmt(x), cy=_fmt(y), r=4, fill="white", stroke="black",
                 class_="marker off-scale")
            label = f"{label} (off-scale, Im = {e.tau.imag:.3f})"
        if e.tau.real == 0.0:
            _sub(markers, "text", label, x=_fmt(x - 8), y=_fmt(y + 4), text_anchor="end", class_="marker-label")
        elif 0.0 < e.tau.real < 0.5 - 1e-9:
            # interior arc points are crowded: hang the labels below the arc
            drop = 20 if e.tau.real < 0.25 else 36
            _sub(markers, "line", x1=_fmt(x), y1=_fmt(y + 5), x2=_fmt(x), y2=_fmt(y + drop - 10),
                 stroke="#666666", class_="leader")
            _sub(markers, "text", label, x=_fmt(x), y=_fmt(y + drop), text_anchor="middle", class_="marker-label")
        else:
            _sub(markers, "text", label, x=_fmt(x + 8), y=_fmt(y + 4), class_="marker-label")

    _sub(root, "text", "SL(2,Z) fundamental domain; markers are the CM points of the special-value table",
         x=WIDTH // 2, y=HEIGHT - 8, text_anchor="middle", class_="caption")
    return root


def write_svg(path) -> int:
    """Write the figure to ``path``; returns the number of markers drawn."""
    root = build_svg()
    ET.ElementTree(root).write(path, encoding="utf-8", xml_declaration=True)
    return sum(1 for el in root.iter("circle") if "marker" in el.get("class", ""))
