"""Read and write PGM/PPM images (ASCII and binary), plus optional PNG.

The PNM formats are decoded from scratch so test golden files stay
bit-exact without any external decoder. Only maxval 255 is accepted.
PNG support is optional and delegates to Pillow when it is installed.
"""

from pathlib import Path

import numpy as np

from . import raster

_WHITESPACE = b" \t\n\r\v\f"
_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class PnmError(ValueError):
    """Malformed or truncated image file."""


class UnsupportedFormatError(PnmError):
    """File is recognizable but not a format this package handles."""


def _next_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    # Skip whitespace and #-comments, then collect one token.
    n = len(buf)
    while pos < n:
        ch = buf[pos]
        if ch in _WHITESPACE:
            pos += 1
        elif ch == ord("#"):
            nl = buf.find(b"\n", pos)
            pos = n if nl < 0 else nl + 1
        else:
            break
    if pos >= n:
        raise PnmError("truncated header")
    start = pos
    while pos < n and buf[pos] not in _WHITESPACE and buf[pos] != ord("#"):
        pos += 1
    return buf[start:pos], pos


def _int_token(buf: bytes, pos: int, what: str) -> tuple[int, int]:
    tok, pos = _next_token(buf, pos)
    try:
        value = int(tok)
    except ValueError:
        raise PnmError(f"malformed header: bad {what} {tok!r}") from None
    if value < 0:
        raise PnmError(f"malformed header: negative {what}")
    return value, pos


def _strip_comments(buf: bytes) -> bytes:
    if b"#" not in buf:
        return buf
    out = []
    pos = 0
    while pos < len(buf):
        hash_at = buf.find(b"#", pos)
        if hash_at < 0:
            out.append(buf[pos:])
            break
        out.append(buf[pos:hash_at])
        nl = buf.find(b"\n", hash_at)
        pos = len(buf) if nl < 0 else nl + 1
    return b" ".join(out)


def decode_pnm(buf: bytes) -> np.ndarray:
    """Decode PNM bytes into a gray (P2/P5) or color (P3/P6) uint8 array."""
    magic, pos = _next_token(buf, 0)
    if magic not in (b"P2", b"P3", b"P5", b"P6"):
        raise UnsupportedFormatError(f"unsupported magic {magic!r}")
    color = magic in (b"P3", b"P6")
    binary = magic in (b"P5", b"P6")
    width, pos = _int_token(buf, pos, "width")
    height, pos = _int_token(buf, pos, "height")
    maxval, pos = _int_token(buf, pos, "maxval")
    if width == 0 or height == 0:
        raise PnmError("malformed header: zero dimension")
    if maxval != 255:
        raise UnsupportedFormatError(f"unsupported bit depth: maxval {maxval}")
    channels = 3 if color else 1
    count = width * height * channels

    if binary:
        # Exactly one whitespace byte separates maxval from the raster.
        if pos >= len(buf) or buf[pos] not in _WHITESPACE:
            raise PnmError("malformed header: missing raster separator")
        pos += 1
        raster_bytes = buf[pos : pos + count]
        if len(raster_bytes) < count:
            raise PnmError("truncated pixel data")
        flat = np.frombuffer(raster_bytes, dtype=np.uint8, count=count)
    else:
        tokens = _strip_comments(buf[pos:]).split()
        if len(tokens) < count:
            raise PnmError("truncated pixel data")
        try:
            flat = np.array(tokens[:count], dtype=np.int64)
        except ValueError:
            raise PnmError("malformed pixel data") from None
        if flat.min() < 0 or flat.max() > maxval:
            raise PnmError("pixel value out of range")
        flat = flat.astype(np.uint8)

    if color:
        return flat.reshape(height, width, 3)
    return flat.reshape(height, width)


def encode_pnm(img: np.ndarray, ascii_: bool = False) -> bytes:
    """Encode a gray or color uint8 array as PNM bytes (binary by default)."""
    img = np.asarray(img)
    if img.ndim == 2:
        magic = b"P2" if ascii_ else b"P5"
        img = raster.as_gray(img)
    elif img.ndim == 3:
        magic = b"P3" if ascii_ else b"P6"
        img = raster.as_rgb(img)
    else:
        raise ValueError("expected a 2-D gray or (H, W, 3) color image")
    height, width = img.shape[:2]
    header = b"%s\n%d %d\n255\n" % (magic, width, height)
    if not ascii_:
        return header + img.tobytes()
    flat = img.reshape(-1)
    lines = []
    for i in range(0, flat.size, 16):
        lines.append(b" ".join(b"%d" % v for v in flat[i : i + 16]))
    return header + b"\n".join(lines) + b"\n"


def _read_png(path: Path) -> np.ndarray:
    try:
        from PIL import Image
    except ImportError:
        raise UnsupportedFormatError(
            "PNG support requires Pillow (pip install agckit[png])"
        ) from None
    with Image.open(path) as im:
        if im.mode in ("I", "I;16", "I;16B", "F"):
            raise UnsupportedFormatError("unsupported bit depth: PNG is not 8-bit")
        if im.mode == "L":
            return np.asarray(im, dtype=np.uint8)
        if im.mode != "RGB":
            im = im.convert("RGB")
        return np.asarray(im, dtype=np.uint8)


def _write_png(img: np.ndarray, path: Path) -> None:
    try:
        from PIL import Image
    except ImportError:
        raise UnsupportedFormatError(
            "PNG support requires Pillow (pip install agckit[png])"
        ) from None
    Image.fromarray(img).save(path, format="PNG")


def read_image(path) -> np.ndarray:
    """Decode an image file; gray for P2/P5, color for P3/P6, either for PNG.

    Format is sniffed from the magic bytes, falling back to the .png suffix.
    """
    path = Path(path)
    buf = path.read_bytes()
    if buf[:2] in (b"P2", b"P3", b"P5", b"P6"):
        return decode_pnm(buf)
    if buf[:8] == _PNG_MAGIC or path.suffix.lower() == ".png":
        return _read_png(path)
    raise UnsupportedFormatError(f"unsupported image format: {path.name}")


def write_image(img, path, ascii_: bool = False) -> None:
    """Write an image losslessly; format chosen by the path suffix.

    .pgm expects gray, .ppm expects color, .pnm takes either, .png takes
    either (requires Pillow).
    """
    img = np.asarray(img)
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".png":
        _write_png(img, path)
        return
    if suffix == ".pgm" and img.ndim != 2:
        raise ValueError("cannot write a color image as PGM")
    if suffix == ".ppm" and img.ndim != 3:
        raise ValueError("cannot write a grayscale image as PPM")
    if suffix not in (".pgm", ".ppm", ".pnm"):
        raise UnsupportedFormatError(f"unsupported output format: {path.name}")
    path.write_bytes(encode_pnm(img, ascii_=ascii_))
