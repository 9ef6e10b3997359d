"""Draws the wireframe screenshots of the quizapp fixture project."""

import sys
from pathlib import Path

from PIL import Image, ImageDraw

W, H = 640, 400

SCREENS = {
    "dashboard": [("bar", "QuizCraft  |  My quizzes"), ("button", "+ New quiz"),
                  ("row", "Algebra basics  (draft)"), ("row", "World capitals  (published)"),
                  ("row", "Photosynthesis  (draft)")],
    "quiz-editor": [("bar", "Edit quiz: Algebra basics"), ("field", "Title"),
                    ("field", "Description"), ("row", "Question 1: 2x + 3 = 7"),
                    ("button", "Add question")],
    "question-form": [("bar", "New question"), ("field", "Question text"),
                      ("row", "( ) Answer A"), ("row", "( ) Answer B"), ("row", "( ) Answer C"),
                      ("button", "Save")],
    "publish-dialog": [("bar", "Publish quiz"), ("row", "Visible to: Class 7b"),
                       ("row", "Opens: 2026-11-02 08:00"), ("button", "Publish"),
                       ("button", "Cancel")],
    "quiz-list": [("bar", "Open quizzes"), ("row", "World capitals  - due Friday"),
                  ("row", "Fractions  - due Monday"), ("button", "Start")],
    "question-view": [("bar", "World capitals  3 / 10"), ("row", "Capital of Peru?"),
                      ("row", "( ) Lima"), ("row", "( ) Quito"), ("row", "( ) Bogota"),
                      ("button", "Next")],
    "results": [("bar", "Your result: 7 / 10"), ("row", "Q3 wrong: Quito"),
                ("row", "Q6 wrong: Canberra"), ("row", "Q9 wrong: Ottawa"),
                ("button", "Back to quizzes")],
}


def draw(items):
    img = Image.new("RGB", (W, H), (246, 247, 250))
    d = ImageDraw.Draw(img)
    y = 0
    for kind, label in items:
        if kind == "bar":
            d.rectangle([0, 0, W, 48], fill=(46, 84, 150))
            d.text((16, 18), label, fill=(255, 255, 255))
            y = 64
        elif kind == "button":
            d.rectangle([16, y, 176, y + 32], fill=(52, 140, 90))
            d.text((28, y + 10), label, fill=(255, 255, 255))
            y += 44
        elif kind == "field":
            d.text((16, y), label, fill=(60, 60, 60))
            d.rectangle([16, y + 14, W - 16, y + 40], outline=(150, 150, 150), fill=(255, 255, 255))
            y += 52
        else:
            d.rectangle([16, y, W - 16, y + 32], outline=(210, 210, 215), fill=(255, 255, 255))
            d.text((28, y + 10), label, fill=(30, 30, 30))
            y += 40
    return img


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, items in SCREENS.items():
        draw(items).save(out / f"{name}.png", optimize=False)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "testdata/quizapp/screenshots")
