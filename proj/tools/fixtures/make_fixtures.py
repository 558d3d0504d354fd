#!/usr/bin/env python3
# Copyright 2026 The Plateflow Authors.
# SPDX-License-Identifier: Apache-2.0
"""Generates the committed replay fixture set under tests/fixtures/.

Scenes are synthetic: plate and glyph positions are chosen here, drawn into
PNG images, and encoded as anchor-free detector head tensors (.rawhead) in
the letterboxed 640x640 model space. Reference outputs are computed by an
independent NumPy implementation of decode, NMS, letterbox unmapping,
cropping and x-ordering, so the C++ pipeline is checked against a second
implementation rather than against itself.

Candidate scores and overlaps are kept away from the decision thresholds so
float32/float64 rounding cannot flip a keep/suppress decision.

Also writes tiny ONNX models (hand-encoded protobuf, no onnx package needed)
used by the runtime backend tests, with a NumPy reference output.

Usage: python3 tools/fixtures/make_fixtures.py [--out tests/fixtures]
"""

import argparse
import json
import math
import os
import struct

import numpy as np
from PIL import Image, ImageDraw, ImageFont

INPUT = 640
CONF = 0.25
NMS_IOU = 0.45
PAD_RATIO = 0.05
PLATE_ANCHORS = 2100
CHAR_ANCHORS = 525
GLYPHS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
FONT_PATH = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono-Bold.ttf"

# Margins that keep generated values clear of decision boundaries.
SCORE_MARGIN = 0.02
IOU_MARGIN = 0.05
FLOOR_MARGIN = 1e-3


class Reject(Exception):
    pass


# ---------------------------------------------------------------- geometry


def letterbox(sw, sh, dst=INPUT):
    scale = min(dst / sw, dst / sh)
    return {
        "scale": scale,
        "pad_x": max(0.0, (dst - scale * sw) / 2.0),
        "pad_y": max(0.0, (dst - scale * sh) / 2.0),
        "src_w": sw,
        "src_h": sh,
    }


def map_box(b, t):
    s, px, py = t["scale"], t["pad_x"], t["pad_y"]
    return [b[0] * s + px, b[1] * s + py, b[2] * s + px, b[3] * s + py]


def clamp(v, lo, hi):
    return min(max(v, lo), hi)


def unmap_box(b, t):
    s, px, py = t["scale"], t["pad_x"], t["pad_y"]
    w, h = float(t["src_w"]), float(t["src_h"])
    return [
        clamp((b[0] - px) / s, 0.0, w),
        clamp((b[1] - py) / s, 0.0, h),
        clamp((b[2] - px) / s, 0.0, w),
        clamp((b[3] - py) / s, 0.0, h),
    ]


def area(b):
    return (b[2] - b[0]) * (b[3] - b[1])


def iou(a, b):
    iw = min(a[2], b[2]) - max(a[0], b[0])
    ih = min(a[3], b[3]) - max(a[1], b[1])
    if iw <= 0 or ih <= 0:
        return 0.0
    inter = iw * ih
    uni = area(a) + area(b) - inter
    return 0.0 if uni <= 0 else min(max(inter / uni, 0.0), 1.0)


# ----------------------------------------------------------- postprocess


def decode(tensor, conf):
    rows, cols = tensor.shape
    out = []
    for c in range(cols):
        scores = tensor[4:, c]
        k = int(np.argmax(scores))
        s = float(scores[k])
        if s < conf:
            continue
        cx, cy, w, h = (float(v) for v in tensor[:4, c])
        box = [cx - w / 2.0, cy - h / 2.0, cx + w / 2.0, cy + h / 2.0]
        if box[2] - box[0] > 0 and box[3] - box[1] > 0:
            out.append({"box": box, "class_id": k, "confidence": s})
    return out


def nms(dets, thr, class_aware):
    order = sorted(
        dets, key=lambda d: (-d["confidence"], d["box"][0], d["box"][1], d["class_id"])
    )
    kept = []
    for d in order:
        ok = True
        for k in kept:
            if class_aware and k["class_id"] != d["class_id"]:
                continue
            if iou(k["box"], d["box"]) > thr:
                ok = False
                break
        if ok:
            kept.append(d)
    return kept


def postprocess(tensor, t, class_aware):
    out = []
    for d in nms(decode(tensor, CONF), NMS_IOU, class_aware):
        b = unmap_box(d["box"], t)
        if b[2] - b[0] > 0 and b[3] - b[1] > 0:
            out.append(dict(d, box=b))
    return out


def check_margins(tensor):
    """Rejects tensors whose decisions sit close to a threshold."""
    rows, cols = tensor.shape
    cands = []
    for c in range(cols):
        s = float(np.max(tensor[4:, c]))
        if abs(s - CONF) < SCORE_MARGIN:
            raise Reject("score near threshold")
        if s >= CONF:
            cx, cy, w, h = (float(v) for v in tensor[:4, c])
            cands.append([cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2])
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            if abs(iou(cands[i], cands[j]) - NMS_IOU) < IOU_MARGIN:
                raise Reject("overlap near NMS threshold")


# -------------------------------------------------------------- pipeline


def crop_rect(plate, pad, img_w, img_h):
    w = plate[2] - plate[0]
    h = plate[3] - plate[1]
    px, py = pad * w, pad * h
    edges = [plate[0] - px, plate[1] - py, plate[2] + px, plate[3] + py]
    for e in edges:
        if abs(e - round(e)) < FLOOR_MARGIN:
            raise Reject("crop edge near a pixel boundary")
    x0 = max(0, math.floor(edges[0]))
    y0 = max(0, math.floor(edges[1]))
    x1 = min(img_w, math.ceil(edges[2]))
    y1 = min(img_h, math.ceil(edges[3]))
    return x0, y0, x1, y1


def reading_order(obs):
    def key(o):
        b = o["box"]
        return ((b[0] + b[2]) / 2.0, (b[1] + b[3]) / 2.0, -o["confidence"], o["class_id"])

    return sorted(obs, key=key)


def row_order(obs):
    if len(obs) < 2:
        return reading_order(obs)
    heights = sorted(o["box"][3] - o["box"][1] for o in obs)
    n = len(heights)
    med = heights[n // 2] if n % 2 else (heights[n // 2 - 1] + heights[n // 2]) / 2.0
    gap = 0.5 * med
    yc = lambda o: (o["box"][1] + o["box"][3]) / 2.0
    by_y = sorted(obs, key=yc)
    if yc(by_y[-1]) - yc(by_y[0]) <= gap:
        return reading_order(obs)
    rows = [[by_y[0]]]
    for a, b in zip(by_y, by_y[1:]):
        if yc(b) - yc(a) > gap:
            rows.append([])
        rows[-1].append(b)
    out = []
    for r in rows:
        out.extend(reading_order(r))
    return out


# --------------------------------------------------------- tensor builder


def f32(v):
    return float(np.float32(v))


class HeadBuilder:
    def __init__(self, rng, num_classes, anchors):
        self.rng = rng
        self.nc = num_classes
        self.t = np.zeros((4 + num_classes, anchors), dtype=np.float32)
        self.free = list(rng.permutation(anchors))

    def put(self, box, scores):
        """box in model pixels (x1,y1,x2,y2); scores: {class: score}."""
        col = self.free.pop()
        cx, cy = (box[0] + box[2]) / 2, (box[1] + box[3]) / 2
        self.t[0, col], self.t[1, col] = cx, cy
        self.t[2, col], self.t[3, col] = box[2] - box[0], box[3] - box[1]
        self.t[4:, col] = self.rng.uniform(0.0, 0.08, self.nc)
        for k, s in scores.items():
            self.t[4 + k, col] = s

    def background(self):
        for col in self.free:
            cx, cy = self.rng.uniform(0, INPUT, 2)
            w, h = self.rng.uniform(4, 120, 2)
            self.t[:4, col] = [cx, cy, w, h]
            self.t[4:, col] = self.rng.uniform(0.0, 0.18, self.nc)
        self.free = []
        return self.t

    def jitter(self, box, frac):
        w, h = box[2] - box[0], box[3] - box[1]
        d = self.rng.uniform(-frac, frac, 4)
        return [box[0] + d[0] * w, box[1] + d[1] * h, box[2] + d[2] * w, box[3] + d[3] * h]


def duplicate(builder, box, min_iou=0.6):
    for _ in range(100):
        j = builder.jitter(box, 0.06)
        if iou(j, box) > min_iou and area(j) > 0:
            return j
    raise Reject("could not jitter")


def plate_tensor(rng, plates_model, decoys_model):
    """plates_model: list of (box, score) in model space."""
    hb = HeadBuilder(rng, 1, PLATE_ANCHORS)
    for box, score in plates_model:
        hb.put(box, {0: score})
        for _ in range(3):
            hb.put(duplicate(hb, box), {0: float(rng.uniform(0.3, score - 0.05))})
    for box in decoys_model:
        hb.put(box, {0: float(rng.uniform(0.05, 0.2))})
    t = hb.background()
    check_margins(t)
    return t


def char_tensor(rng, glyphs_model):
    """glyphs_model: list of (box, class_id, score)."""
    hb = HeadBuilder(rng, 36, CHAR_ANCHORS)
    for box, cls, score in glyphs_model:
        rival = int((cls + 1 + rng.integers(0, 35)) % 36)
        hb.put(box, {cls: score, rival: float(rng.uniform(0.05, 0.2))})
        # Cross-class duplicate: survives class-aware NMS, not class-agnostic.
        other = int((cls + 7) % 36)
        hb.put(duplicate(hb, box), {other: float(rng.uniform(0.3, score - 0.1))})
        hb.put(duplicate(hb, box), {cls: float(rng.uniform(0.3, score - 0.05))})
    t = hb.background()
    check_margins(t)
    return t


def write_rawhead(path, tensor):
    t = np.ascontiguousarray(tensor, dtype="<f4")
    with open(path, "wb") as f:
        f.write(b"RHD0")
        f.write(struct.pack("<III", t.shape[0], t.shape[1], 0))
        f.write(t.tobytes())


# ------------------------------------------------------------- drawing


def font(size):
    try:
        return ImageFont.truetype(FONT_PATH, size)
    except OSError:
        return ImageFont.load_default()


def draw_scene(w, h, rng):
    base = rng.integers(60, 140)
    img = Image.new("RGB", (w, h), (int(base), int(base) + 10, int(base) + 20))
    d = ImageDraw.Draw(img)
    for _ in range(6):
        x0, y0 = rng.integers(0, w), rng.integers(0, h)
        x1, y1 = x0 + rng.integers(40, w // 2), y0 + rng.integers(30, h // 3)
        c = tuple(int(v) for v in rng.integers(30, 200, 3))
        d.rectangle([x0, y0, x1, y1], fill=c)
    return img


def draw_plate(img, box, glyph_boxes_src, text):
    d = ImageDraw.Draw(img)
    d.rectangle(box, fill=(235, 235, 225), outline=(20, 20, 20), width=2)
    for gb, ch in zip(glyph_boxes_src, text):
        size = max(8, int((gb[3] - gb[1]) * 0.95))
        d.text(((gb[0] + gb[2]) / 2, (gb[1] + gb[3]) / 2), ch, fill=(15, 15, 15),
               font=font(size), anchor="mm")


# ---------------------------------------------------------------- scenes


def layout_glyphs(plate_crop_box, text, rows):
    """Glyph boxes inside the plate, in crop pixels. rows: 1 or split index."""
    x1, y1, x2, y2 = plate_crop_box
    w, h = x2 - x1, y2 - y1
    lines = [text] if rows == 1 else [text[:rows], text[rows:]]
    boxes = []
    for li, line in enumerate(lines):
        n = len(line)
        if len(lines) == 1:
            top, bot = y1 + 0.16 * h, y2 - 0.16 * h
        else:
            band = h / 2
            top, bot = y1 + li * band + 0.1 * band, y1 + (li + 1) * band - 0.1 * band
        pitch = (w * 0.86) / n
        for i in range(n):
            gx1 = x1 + 0.07 * w + i * pitch + 0.08 * pitch
            boxes.append([gx1, top, gx1 + 0.84 * pitch, bot])
    return boxes


SCENES = [
    # name, width, height, plates [(text, rows, box fractions cx cy w h)], decoys
    ("lpr_0001", 1280, 720, [("LEB4821", 1, (0.46, 0.68, 0.17, 0.07))], 1),
    ("lpr_0002", 640, 640, [("7XKZ390", 1, (0.52, 0.61, 0.30, 0.09))], 0),
    ("lpr_0003", 1920, 1080, [("ABJ2291", 1, (0.26, 0.70, 0.12, 0.05)),
                              ("KHI0457", 1, (0.72, 0.58, 0.10, 0.045))], 2),
    ("lpr_0004", 800, 600, [], 3),
    ("lpr_0005", 720, 1280, [("RWP123", 1, (0.085, 0.022, 0.16, 0.04))], 0),
    ("lpr_0006", 1024, 768, [("ICT5521", 3, (0.50, 0.55, 0.16, 0.12))], 1),
    ("lpr_0007", 1280, 960, [("AA1100", 1, (0.33, 0.74, 0.15, 0.06))], 2),
    ("lpr_0008", 960, 540, [("QX88ZZ9", 1, (0.61, 0.49, 0.22, 0.08))], 0),
]


def build_scene(rng, name, w, h, plates, n_decoys, out):
    t_img = letterbox(w, h)
    true_boxes = []
    for text, rows, (fx, fy, fw, fh) in plates:
        cx = fx * w + rng.uniform(-3, 3)
        cy = fy * h + rng.uniform(-3, 3)
        bw, bh = fw * w, fh * h
        box = [max(0.0, cx - bw / 2), max(0.0, cy - bh / 2),
               min(float(w), cx + bw / 2), min(float(h), cy + bh / 2)]
        true_boxes.append(box)

    scores = sorted(rng.uniform(0.6, 0.95, len(plates)), reverse=True)
    plates_model = [(map_box(b, t_img), float(s)) for b, s in zip(true_boxes, scores)]
    decoys = []
    for _ in range(n_decoys):
        x, y = rng.uniform(20, INPUT - 120, 2)
        decoys.append([x, y, x + rng.uniform(40, 100), y + rng.uniform(15, 40)])
    ptensor = plate_tensor(rng, plates_model, decoys)
    plate_dets = postprocess(ptensor, t_img, class_aware=True)
    if len(plate_dets) != len(plates):
        raise Reject("plate count changed")

    img = draw_scene(w, h, rng)
    rec = {"image": name, "width": w, "height": h, "plates": []}
    truth_lines = []
    char_tensors = {}
    for k, det in enumerate(plate_dets):
        # Plates are ranked by confidence; find the true plate it came from.
        src = max(range(len(true_boxes)), key=lambda i: iou(true_boxes[i], det["box"]))
        text, rows, _ = plates[src]
        x0, y0, x1, y1 = crop_rect(det["box"], PAD_RATIO, w, h)
        cw, ch = x1 - x0, y1 - y0
        tb = true_boxes[src]
        plate_in_crop = [tb[0] - x0, tb[1] - y0, tb[2] - x0, tb[3] - y0]
        gboxes = layout_glyphs(plate_in_crop, text, rows)
        t_crop = letterbox(cw, ch)
        gscores = rng.uniform(0.55, 0.95, len(text))
        glyphs_model = [(map_box(gb, t_crop), GLYPHS.index(c), float(s))
                        for gb, c, s in zip(gboxes, text, gscores)]
        ctensor = char_tensor(rng, glyphs_model)
        obs = postprocess(ctensor, t_crop, class_aware=False)
        if len(obs) != len(text):
            raise Reject("glyph count changed")
        for o in obs:
            b = o["box"]
            if b[0] < 0 or b[1] < 0 or b[2] > cw or b[3] > ch:
                raise Reject("glyph outside crop")
        ordered = reading_order(obs)
        by_rows = row_order(obs)
        glyph_text = "".join(GLYPHS[o["class_id"]] for o in ordered)
        rows_text = "".join(GLYPHS[o["class_id"]] for o in by_rows)
        expected_rows_text = text
        if rows == 1 and glyph_text != text:
            raise Reject("single-row plate does not read back")
        if rows_text != expected_rows_text:
            raise Reject("row mode does not read back")
        char_tensors[f"{name}__plate{k}"] = ctensor
        rec["plates"].append({
            "box": det["box"],
            "confidence": det["confidence"],
            "crop": [x0, y0, x1, y1],
            "text": glyph_text,
            "text_rows": rows_text,
            "characters": [{"glyph": GLYPHS[o["class_id"]], "class_id": o["class_id"],
                            "box": o["box"], "confidence": o["confidence"]}
                           for o in ordered],
        })
        gsrc = [[g[0] + x0, g[1] + y0, g[2] + x0, g[3] + y0] for g in gboxes]
        draw_plate(img, tb, gsrc, text)
        truth_lines.append(f"{name} {text} {tb[0]:.3f} {tb[1]:.3f} {tb[2]:.3f} {tb[3]:.3f}")

    lpr = os.path.join(out, "lpr")
    img.save(os.path.join(lpr, "test", "images", name + ".png"))
    with open(os.path.join(lpr, "test", "labels", name + ".txt"), "w") as f:
        for tb in true_boxes:
            cx, cy = (tb[0] + tb[2]) / 2 / w, (tb[1] + tb[3]) / 2 / h
            bw, bh = (tb[2] - tb[0]) / w, (tb[3] - tb[1]) / h
            f.write(f"0 {cx:.6f} {cy:.6f} {bw:.6f} {bh:.6f}\n")
    write_rawhead(os.path.join(lpr, "recorded", name + ".rawhead"), ptensor)
    for key, ct in char_tensors.items():
        write_rawhead(os.path.join(lpr, "recorded", key + ".rawhead"), ct)
    return rec, truth_lines


def build_crop(rng, name, text, cw, ch, out):
    """A standalone plate crop and its character tensor."""
    t_crop = letterbox(cw, ch)
    img = Image.new("RGB", (cw, ch), (235, 235, 225))
    obs = []
    if text:
        plate = [2.0, 2.0, cw - 2.0, ch - 2.0]
        gboxes = layout_glyphs(plate, text, 1)
        gscores = rng.uniform(0.55, 0.95, len(text))
        glyphs_model = [(map_box(gb, t_crop), GLYPHS.index(c), float(s))
                        for gb, c, s in zip(gboxes, text, gscores)]
        tensor = char_tensor(rng, glyphs_model)
        draw_plate(img, [0, 0, cw - 1, ch - 1], gboxes, text)
    else:
        hb = HeadBuilder(rng, 36, CHAR_ANCHORS)
        tensor = hb.background()
        check_margins(tensor)
    obs = reading_order(postprocess(tensor, t_crop, class_aware=False))
    got = "".join(GLYPHS[o["class_id"]] for o in obs)
    if got != text:
        raise Reject("crop does not read back")
    crops = os.path.join(out, "crops")
    img.save(os.path.join(crops, name + ".png"))
    write_rawhead(os.path.join(crops, name + ".rawhead"), tensor)
    # Observations in rank (confidence) order, as recognition returns them.
    ranked = postprocess(tensor, t_crop, class_aware=False)
    return {
        "crop": name, "width": cw, "height": ch, "text": got,
        "observations": [{"glyph": GLYPHS[o["class_id"]], "class_id": o["class_id"],
                          "box": o["box"], "confidence": o["confidence"]} for o in ranked],
    }


def retry(rng, fn, *args):
    for _ in range(200):
        try:
            return fn(rng, *args)
        except Reject:
            continue
    raise RuntimeError(f"could not build fixture {args[0]}")


# ------------------------------------------------------------------ onnx


def varint(n):
    out = bytearray()
    n &= (1 << 64) - 1
    while True:
        b = n & 0x7F
        n >>= 7
        if n:
            out.append(b | 0x80)
        else:
            out.append(b)
            return bytes(out)


def fv(field, value):
    return varint(field << 3) + varint(value)


def fb(field, data):
    if isinstance(data, str):
        data = data.encode()
    return varint((field << 3) | 2) + varint(len(data)) + data


def tensor_proto(name, array):
    dtype = {np.dtype("float32"): 1, np.dtype("int64"): 7}[array.dtype]
    msg = b"".join(fv(1, d) for d in array.shape)
    msg += fv(2, dtype) + fb(8, name) + fb(9, array.astype(array.dtype.newbyteorder("<")).tobytes())
    return msg


def attr_ints(name, values):
    return fb(1, name) + fv(20, 7) + b"".join(fv(8, v) for v in values)


def node(op, inputs, outputs, attrs=()):
    msg = b"".join(fb(1, i) for i in inputs) + b"".join(fb(2, o) for o in outputs)
    msg += fb(3, op + "_" + outputs[0]) + fb(4, op)
    return msg + b"".join(fb(5, a) for a in attrs)


def value_info(name, shape):
    dims = b"".join(fb(1, fv(1, d)) for d in shape)
    tensor_type = fv(1, 1) + fb(2, dims)
    return fb(1, name) + fb(2, fb(1, tensor_type))


def tiny_model(rows, weights, bias):
    """images[1,3,640,640] -> AvgPool32 -> Conv1x1 -> Sigmoid -> [1,rows,400]."""
    nodes = [
        node("AveragePool", ["images"], ["pooled"],
             [attr_ints("kernel_shape", [32, 32]), attr_ints("strides", [32, 32])]),
        node("Conv", ["pooled", "W", "B"], ["conv"], [attr_ints("kernel_shape", [1, 1])]),
        node("Sigmoid", ["conv"], ["act"]),
        node("Reshape", ["act", "shape"], ["output0"]),
    ]
    inits = [
        tensor_proto("W", weights.reshape(rows, 3, 1, 1).astype(np.float32)),
        tensor_proto("B", bias.astype(np.float32)),
        tensor_proto("shape", np.array([1, rows, 400], dtype=np.int64)),
    ]
    graph = b"".join(fb(1, n) for n in nodes) + fb(2, "tiny_head")
    graph += b"".join(fb(5, t) for t in inits)
    graph += fb(11, value_info("images", [1, 3, INPUT, INPUT]))
    graph += fb(12, value_info("output0", [1, rows, 400]))
    opset = fb(1, "") + fv(2, 12)
    return fv(1, 7) + fb(2, "plateflow-fixtures") + fb(7, graph) + fb(8, opset)


def tiny_reference(image_path, weights, bias):
    img = np.asarray(Image.open(image_path).convert("RGB"))
    assert img.shape == (INPUT, INPUT, 3)
    x = img.astype(np.float32).transpose(2, 0, 1) / np.float32(255.0)
    pooled = x.astype(np.float64).reshape(3, 20, 32, 20, 32).mean(axis=(2, 4))
    conv = weights @ pooled.reshape(3, 400) + bias[:, None]
    return (1.0 / (1.0 + np.exp(-conv))).astype(np.float32)


def build_models(rng, out):
    models = os.path.join(out, "models")
    os.makedirs(models, exist_ok=True)
    for name, rows in (("tiny_plate", 5), ("tiny_char", 40), ("tiny_bad10", 10)):
        w = rng.normal(0, 2.0, (rows, 3))
        b = rng.normal(0, 0.5, rows)
        with open(os.path.join(models, name + ".onnx"), "wb") as f:
            f.write(tiny_model(rows, w, b))
        if name == "tiny_plate":
            ref = tiny_reference(os.path.join(out, "lpr", "test", "images", "lpr_0002.png"), w, b)
            write_rawhead(os.path.join(models, "lpr_0002.rawhead"), ref)


# ------------------------------------------------------------------ main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..",
                                                  "tests", "fixtures"))
    ap.add_argument("--seed", type=int, default=20231016)
    args = ap.parse_args()
    out = os.path.normpath(args.out)
    lpr = os.path.join(out, "lpr")
    for d in ("test/images", "test/labels", "recorded"):
        os.makedirs(os.path.join(lpr, d), exist_ok=True)
    os.makedirs(os.path.join(out, "crops"), exist_ok=True)

    rng = np.random.default_rng(args.seed)
    references = []
    truth = []
    for name, w, h, plates, decoys in SCENES:
        rec, lines = retry(rng, build_scene, name, w, h, plates, decoys, out)
        references.append(rec)
        truth.extend(lines)

    with open(os.path.join(lpr, "reference.json"), "w") as f:
        json.dump({"images": references}, f, indent=1)
    header = "# Copyright 2026 The Plateflow Authors.\n# SPDX-License-Identifier: Apache-2.0\n"
    with open(os.path.join(lpr, "truth.txt"), "w") as f:
        f.write(header)
        f.write("# image text x1 y1 x2 y2 (source pixels)\n")
        f.write("\n".join(truth) + "\n")
    with open(os.path.join(lpr, "data.yaml"), "w") as f:
        f.write(header + "nc: 1\nnames: ['plate']\n")

    crops = [retry(rng, build_crop, "plate_ABC123", "ABC123", 220, 72, out),
             retry(rng, build_crop, "blank_crop", "", 180, 60, out)]
    with open(os.path.join(out, "crops", "reference.json"), "w") as f:
        json.dump({"crops": crops}, f, indent=1)

    build_models(rng, out)

    with open(os.path.join(out, "provenance.json"), "w") as f:
        json.dump({
            "generator": "tools/fixtures/make_fixtures.py",
            "seed": args.seed,
            "input_size": INPUT,
            "conf_threshold": CONF,
            "nms_iou_threshold": NMS_IOU,
            "plate_nms": "class-aware",
            "character_nms": "class-agnostic",
            "pad_ratio": PAD_RATIO,
            "plate_anchors": PLATE_ANCHORS,
            "character_anchors": CHAR_ANCHORS,
            "character_keys": "<image>__plate<k>, k = plate rank",
        }, f, indent=1)


if __name__ == "__main__":
    main()
