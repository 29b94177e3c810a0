#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 techlens contributors
"""Regenerates the committed test fixtures.

Outputs are checked in and frozen; tests read the files and never run this
script. Rerun it only when deliberately reshaping the fixtures, and expect
to update the tests that pin exact values.

  data/fixtures/corpus_50.jsonl   deterministic synthetic corpus (seed 7)
  data/fixtures/http/*            recorded HTTP responses, keyed by the
                                  percent-encoded request URL
"""

import json
import pathlib
import random
import urllib.parse
from datetime import date, timedelta

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "data" / "fixtures"
HTTP = FIXTURES / "http"
ENDPOINT = "https://medium.com"

# ---------------------------------------------------------------- corpus_50

SEED_TECHS = [
    "iot",
    "blockchain",
    "machine-learning",
    "cloud-computing",
    "virtual-reality",
    "cybersecurity",
]

TECH_SENTENCES = {
    "iot": [
        "Wards wired up the internet of things to watch the oxygen lines.",
        "An iot dashboard tracked every ventilator in the region.",
    ],
    "blockchain": [
        "A blockchain registry certified protective gear shipments.",
        "Auditors grudgingly praised the blockchain ledger.",
    ],
    "machine-learning": [
        "A machine learning model guessed next week's caseload.",
        "Hospitals tuned machine learning triage scores nightly.",
    ],
    "cloud-computing": [
        "Clinics leaned on cloud computing to share records.",
        "The whole census moved to cloud computing overnight.",
    ],
    "virtual-reality": [
        "Therapists ran virtual reality sessions for shut-ins.",
        "A virtual reality museum tour sold out in an hour.",
    ],
    "cybersecurity": [
        "A cybersecurity audit found the hospital VPN wanting.",
        "Boards doubled their cybersecurity budgets in a panic.",
    ],
}

EXTRA_TECH_SENTENCES = [
    "Telcos promised 5g coverage for rural wards.",
    "Big data briefings replaced the morning huddle.",
    "Nurses wore wearables that logged exposure time.",
    "Menus hid behind qr codes on sticky tables.",
    "Warehouses tagged pallets with rfid labels.",
    "A robot trundled samples between floors.",
]

FILLER_SENTENCES = [
    "Case counts dominated every conversation that week.",
    "The queue outside the pharmacy wrapped around the block.",
    "Officials urged patience while the curves refused to bend.",
    "Neighbours traded sourdough starters over the fence.",
    "The nightly applause grew quieter as spring wore on.",
    "Borders reopened, then closed again within days.",
    "Schools improvised timetables nobody could follow.",
    "Furlough letters arrived in thin envelopes.",
]

OTHER_TAGS = [
    "surveillance",
    "social-distancing",
    "economy",
    "finance",
    "remote-working",
    "healthcare",
    "education",
    "politics",
    "supply-chain",
    "mental-health",
]

TITLES = [
    "Notes from week {week}",
    "Dispatch {week}: the numbers and the noise",
    "What changed in week {week}",
    "Field diary, week {week}",
]


def gen_corpus_50():
    rng = random.Random(7)
    articles = []
    for i in range(50):
        published = date(2020, 3, 1) + timedelta(days=4 * i)
        tags = ["covid-19"]
        sentences = [rng.choice(FILLER_SENTENCES)]

        # Every seed technology shows up at least twice as a tag; after the
        # forced cycle roughly 70% of articles carry one or two tech tags.
        if i < 12:
            techs = [SEED_TECHS[i % 6]]
        elif rng.random() < 0.7:
            techs = rng.sample(SEED_TECHS, rng.choice([1, 1, 2]))
        else:
            techs = []
        for tech in techs:
            tags.append(tech)
            sentences.append(rng.choice(TECH_SENTENCES[tech]))

        tags.extend(rng.sample(OTHER_TAGS, rng.choice([1, 2])))
        # industry-4-0 grows more common over time, for the trend fixtures
        if rng.random() < 0.1 + 0.8 * (i / 49):
            tags.append("industry-4-0")
        if rng.random() < 0.2:
            tags.append("pandemic")
        if rng.random() < 0.1:
            tags.append("coronavirus")

        if techs and rng.random() < 0.4:
            sentences.append(rng.choice(EXTRA_TECH_SENTENCES))
        sentences.append(rng.choice(FILLER_SENTENCES))

        articles.append(
            {
                "url": f"{ENDPOINT}/p/s{i + 1:03d}",
                "title": TITLES[i % len(TITLES)].format(week=i // 7 + 10),
                "body": " ".join(sentences),
                "tags": tags,
                "published": published.isoformat(),
            }
        )

    out = FIXTURES / "corpus_50.jsonl"
    with out.open("w") as f:
        for a in articles:
            f.write(json.dumps(a) + "\n")
    print(f"wrote {out} ({len(articles)} articles)")


# ------------------------------------------------------------ http fixtures


def fixture_name(url):
    return urllib.parse.quote(url, safe="")


def write_fixture(url, body):
    path = HTTP / fixture_name(url)
    path.write_text(body)


def archive_page(items):
    lis = "\n".join(
        f'  <li class="archive-item">\n'
        f'    <a class="post-link" href="{href}">{title}</a>\n'
        f'    <time datetime="{dt}">{dt}</time>\n'
        f"  </li>"
        for href, title, dt in items
    )
    return f"<html><body>\n<ul class=\"archive\">\n{lis}\n</ul>\n</body></html>\n"


def article_page(title, dt, body_html, tags):
    tag_lis = "\n".join(
        f'    <li><a href="/tag/{urllib.parse.quote(t)}">{label}</a></li>'
        for t, label in tags
    )
    return (
        "<html><body>\n"
        f'<h1 class="post-title">{title}</h1>\n'
        f'<time class="published" datetime="{dt}">{dt}</time>\n'
        f'<section class="post-body">{body_html}</section>\n'
        f'<ul class="post-tags">\n{tag_lis}\n</ul>\n'
        "</body></html>\n"
    )


def related_page(tag, related):
    lis = "\n".join(
        f'    <li><a href="/tag/{urllib.parse.quote(t)}">{label}</a></li>'
        for t, label in related
    )
    return (
        "<html><body>\n"
        f"<h1>{tag}</h1>\n"
        f'<ul class="related-tags">\n{lis}\n</ul>\n'
        "</body></html>\n"
    )


# The covid-19 archive walk: six good posts across two pages, one duplicate
# entry, one entry with a broken date, and a third page that is entirely
# older than any sensible range and therefore ends the walk.
C19_POSTS = [
    # slug, title html, date, body html, [(tag, label)]
    (
        "c19-001",
        "Masks &amp; sensors",
        "2020-04-21",
        "<p>Cities bolted <em>IoT</em> sensors to lampposts &amp; benches.</p>"
        "<p>Privacy scholars sighed.</p>",
        [("covid-19", "Covid 19"), ("iot", "IoT"), ("surveillance", "Surveillance")],
    ),
    (
        "c19-002",
        "Tracing apps and privacy",
        "2020-04-14",
        "<p>Exposure apps promised anonymity.</p><script>var x = 1;</script>"
        "<p>Few read the fine print.</p>",
        [("covid-19", "Covid 19"), ("privacy", "Privacy"), ("surveillance", "Surveillance")],
    ),
    (
        "c19-003",
        "Machine learning reads the curve",
        "2020-04-02",
        "<p>A machine learning model fit the case curve; big data dashboards bloomed.</p>",
        [("covid-19", "Covid 19"), ("machine-learning", "Machine Learning"), ("big-data", "Big Data")],
    ),
    (
        "c19-004",
        "Supply chains on the ledger",
        "2020-03-28",
        "<p>Retailers piloted a blockchain to certify masks.</p>",
        [("covid-19", "Covid 19"), ("blockchain", "Blockchain"), ("supply-chain", "Supply Chain")],
    ),
    (
        "c19-005",
        "The office is a browser tab",
        "2020-03-15",
        "<p>Everything ran on cloud computing and goodwill.</p>",
        [("covid-19", "Covid 19"), ("remote-work", "Remote Work"), ("cloud-computing", "Cloud Computing")],
    ),
    (
        "c19-006",
        "Lockdown concerts in VR",
        "2020-03-05",
        "<p>Bands played to avatars; virtual reality ticket sales spiked.</p>",
        [("covid-19", "Covid 19"), ("virtual-reality", "Virtual Reality"), ("entertainment", "Entertainment")],
    ),
]

RELATED = {
    # iot lists smart-home twice: fetch must deduplicate
    "iot": [("smart-home", "Smart Home"), ("cybersecurity", "Cybersecurity"),
            ("smart-home", "Smart Home"), ("big-data", "Big Data")],
    "blockchain": [("cryptocurrency", "Cryptocurrency"), ("fintech", "Fintech"),
                   ("cybersecurity", "Cybersecurity")],
    "machine-learning": [("big-data", "Big Data"), ("iot", "IoT"),
                         ("cybersecurity", "Cybersecurity")],
    "cloud-computing": [("cybersecurity", "Cybersecurity"), ("remote-work", "Remote Work")],
    "virtual-reality": [("gaming", "Gaming")],
    "cybersecurity": [("privacy", "Privacy"), ("iot", "IoT"), ("blockchain", "Blockchain")],
    # big-data is never an expansion seed in the tests, but it does appear as
    # a technology tag in the covid-19 walk, so give it a page too.
    "big-data": [("machine-learning", "Machine Learning"), ("iot", "IoT")],
}


def gen_http_fixtures():
    HTTP.mkdir(parents=True, exist_ok=True)
    for old in HTTP.iterdir():
        old.unlink()

    def entry(post):
        slug, title, dt, _, _ = post
        return (f"/p/{slug}", title, dt)

    page1 = [entry(p) for p in C19_POSTS[:4]]
    page2 = [
        entry(C19_POSTS[4]),
        entry(C19_POSTS[0]),  # duplicate of c19-001
        (f"/p/c19-bad", "A post out of time", "not-a-date"),
        entry(C19_POSTS[5]),
    ]
    page3 = [
        ("/p/c19-old1", "December musings", "2019-12-20"),
        ("/p/c19-old2", "Before all this", "2019-12-05"),
    ]
    for n, page in enumerate([page1, page2, page3], start=1):
        write_fixture(f"{ENDPOINT}/tag/covid-19/archive?page={n}", archive_page(page))
    for slug, title, dt, body, tags in C19_POSTS:
        write_fixture(f"{ENDPOINT}/p/{slug}", article_page(title, dt, body, tags))

    # A tag with no posts at all.
    write_fixture(f"{ENDPOINT}/tag/empty-tag/archive?page=1", archive_page([]))

    # A deep archive for exercising the page cap: five one-post pages, then
    # an empty sixth so an uncapped walk still terminates.
    for n in range(1, 6):
        dt = (date(2020, 6, 6) - timedelta(days=n)).isoformat()
        write_fixture(
            f"{ENDPOINT}/tag/deep-dive/archive?page={n}",
            archive_page([(f"/p/deep-{n}", f"Deep dive {n}", dt)]),
        )
        write_fixture(
            f"{ENDPOINT}/p/deep-{n}",
            article_page(
                f"Deep dive {n}",
                dt,
                f"<p>Part {n} of an endless series about cloud computing.</p>",
                [("covid-19", "Covid 19"), ("deep-dive", "Deep Dive")],
            ),
        )
    write_fixture(f"{ENDPOINT}/tag/deep-dive/archive?page=6", archive_page([]))

    for tag, related in RELATED.items():
        write_fixture(f"{ENDPOINT}/tag/{tag}", related_page(tag, related))
    # A tag page without a related-tags list.
    write_fixture(
        f"{ENDPOINT}/tag/economy",
        "<html><body><h1>economy</h1><p>Nothing here but posts.</p></body></html>\n",
    )

    print(f"wrote {sum(1 for _ in HTTP.iterdir())} files under {HTTP}")


if __name__ == "__main__":
    gen_corpus_50()
    gen_http_fixtures()
