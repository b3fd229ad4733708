#!/usr/bin/env python3
"""Drive the HTTP service end to end, in process.

Uploads a word list, walks every endpoint the authoring UI uses, and shows
that descriptor responses are pure (byte-identical for identical queries).
"""

from importlib import resources

from fastapi.testclient import TestClient

import emordle as em
from emordle.service import create_app

client = TestClient(create_app())

csv = (resources.files("emordle.assets.wordlists") / "sadness.csv").read_bytes()
upload = client.post("/api/wordlist", content=csv).json()
wid = upload["id"]
print(f"uploaded word list: id={wid}, {upload['word_count']} words")

schemes = client.get("/api/schemes").json()["schemes"]
print(f"schemes: {[s['id'] for s in schemes]}")
palettes = client.get("/api/palettes").json()["palettes"]
print(f"palettes: {[p['id'] for p in palettes]}")
fonts = client.get("/api/fonts").json()["fonts"]
print(f"fonts: {[f['id'] for f in fonts]}")

layout_doc = client.get(f"/api/layout?id={wid}&seed=5&width=800&height=600")
layout = em.import_layout(layout_doc.content)
print(f"layout: {len(layout.words)} words on {layout.canvas.width}x{layout.canvas.height}")

url = f"/api/descriptor?id={wid}&scheme=fade&speed=0.4&entropy=0.6&seed=5"
first = client.get(url)
second = client.get(url)
desc, _ = em.import_descriptor(first.content)
print(f"descriptor: {len(first.content)} bytes, duration {desc.duration:g} s, "
      f"{desc.groups.group_count} groups")
print(f"purity: identical queries give identical bytes -> {first.content == second.content}")

gif = client.get(f"/api/gif?id={wid}&scheme=fade&speed=1.0&entropy=0.6&seed=5&fps=10&palette=sadness")
print(f"gif: {len(gif.content)} bytes, magic {gif.content[:6]}")

bad = client.get("/api/descriptor?id=nonexistent&scheme=fade")
print(f"unknown id -> {bad.status_code} {bad.json()}")
