#!/usr/bin/env python3
"""Regenerate the shipped word lists under crates/core/data/.

Sources:
  --words       wordninja_words.txt (126k English words, most frequent first, MIT)
  --inflections lemminflect infl_lu.csv.gz (MIT)
  --mime        /etc/mime.types

The hand-curated lists (irregular/invariant/uncountable nouns, CRUD tokens)
are kept in this script so regeneration is reproducible.
"""
import argparse
import gzip
import pathlib
import re

CRUD = ["get", "put", "post", "delete", "create", "read", "update", "remove",
        "insert", "fetch", "retrieve", "purge", "add", "set"]

# Nouns that start with a CRUD token but are not verbs, or inflected forms
# that are overwhelmingly used as nouns in resource names.
CRUD_EXTRA_ALLOWED = ["updater", "updaters", "posts", "sets", "puts", "reads",
                      "setting", "settings", "setup", "setups", "reading", "readings",
                      "address", "addresses", "addon", "addons", "readiness",
                      "getter", "getters", "setter", "setters", "creator", "creators",
                      "postcode", "postcodes", "postal", "poster", "posters"]

KEEP_EXT = {"html", "htm", "pdf", "png", "jpg", "jpeg", "xml", "css", "svg", "zip",
            "tar", "doc", "jar", "mpeg", "mpg", "rss", "rpm", "deb", "csv", "json",
            "js", "ts", "md", "txt", "gif", "bmp", "ico", "tiff", "gz", "bin", "iso",
            "java", "cab", "dart", "scala", "latex", "sh", "py", "rs", "atom", "eps",
            "vcard", "opus", "png", "dot", "diff", "patch", "cache", "com", "ps", "sql"}

EXTRA_EXT = ["heic", "heif", "avif", "webp", "yaml", "yml", "md", "markdown", "tsx",
             "jsx", "go", "py", "rb", "php", "toml", "ini", "log", "bak", "tmp",
             "parquet", "avro", "proto", "ipynb", "bz2", "xz", "7z", "rar", "docx",
             "xlsx", "pptx", "tsv", "ndjson", "jsonl", "geojson", "mp4", "mkv", "mov",
             "flac", "ogg", "webm", "psd", "dwg", "apk", "ipa", "dmg", "exe", "msi",
             "dll", "so", "wasm", "kt", "swift", "cs", "cpp", "hpp", "lock", "env",
             "cfg", "conf", "pem", "crt", "key", "p12", "pfx", "jwk", "gpx", "kml",
             "kmz", "shp", "tgz", "raw", "cr2", "nef", "dng", "aac", "m4a", "wma",
             "flv", "wmv", "avi", "3gp", "epub", "mobi", "rtf", "odt", "ods", "odp",
             "xls", "ppt", "xsd", "wsdl", "graphql", "gql", "har", "pcap", "db",
             "sqlite", "mdb", "accdb", "dbf", "bson", "msgpack", "pb", "onnx", "h5",
             "hdf5", "npy", "npz", "pkl", "pickle", "joblib", "pt", "ckpt", "ttf",
             "otf", "woff", "woff2", "eot"]

IRREGULAR = """
person people
child children
man men
woman women
mouse mice
goose geese
tooth teeth
foot feet
ox oxen
analysis analyses
axis axes
basis bases
crisis crises
diagnosis diagnoses
hypothesis hypotheses
parenthesis parentheses
synopsis synopses
thesis theses
index indices
appendix appendices
matrix matrices
vertex vertices
criterion criteria
phenomenon phenomena
datum data
medium media
curriculum curricula
memorandum memoranda
bacterium bacteria
stratum strata
addendum addenda
cactus cacti
fungus fungi
nucleus nuclei
radius radii
stimulus stimuli
syllabus syllabi
alumnus alumni
focus foci
genus genera
corpus corpora
leaf leaves
life lives
knife knives
wife wives
wolf wolves
half halves
self selves
shelf shelves
calf calves
loaf loaves
thief thieves
elf elves
potato potatoes
tomato tomatoes
hero heroes
echo echoes
veto vetoes
quiz quizzes
die dice
louse lice
formula formulae
antenna antennae
vertebra vertebrae
larva larvae
schema schemata
stigma stigmata
"""

INVARIANT = """
species
series
sheep
deer
fish
moose
swine
bison
salmon
trout
shrimp
aircraft
spacecraft
hovercraft
offspring
headquarters
means
crossroads
barracks
gallows
jeans
trousers
pants
shorts
scissors
glasses
pliers
tongs
tweezers
binoculars
pajamas
clothes
thanks
premises
surroundings
outskirts
savings
earnings
goods
arms
riches
remains
congratulations
odds
amends
chassis
corps
moose
cattle
police
"""

UNCOUNTABLE = """
information
equipment
advice
furniture
luggage
baggage
knowledge
news
music
rice
money
software
hardware
firmware
middleware
feedback
homework
housework
research
evidence
traffic
weather
health
wealth
welfare
progress
access
content
metadata
analytics
physics
mathematics
economics
ethics
politics
linguistics
statistics invariant
electricity
energy
garbage
rubbish
jewelry
jewellery
machinery
mail
email
spam
merchandise
produce
poetry
pottery
scenery
clothing
footwear
underwear
legislation
vocabulary
knowhow
wildlife
livestock
inventory
storage
bandwidth
throughput
latency
telemetry
documentation
config
configuration
authentication
authorization
auth
login
logout
signup
search
billing
pricing
shipping
tracking
logging
monitoring
history
security
privacy
usage
status
sudo
time
info
stuff
staff invariant
personnel invariant
"""

STOP_WORDS = """
i me my myself we our ours ourselves you your yours yourself yourselves he him
his himself she her hers herself it its itself they them their theirs themselves
what which who whom this that these those am is are was were be been being have
has had having do does did doing a an the and but if or because as until while
of at by for with about against between into through during before after above
below to from up down in out on off over under again further then once here there
when where why how all any both each few more most other some such no nor not only
own same so than too very s t can will just don should now d ll m o re ve y ain
aren couldn didn doesn hadn hasn haven isn ma mightn mustn needn shan shouldn
wasn weren won wouldn
"""


def clean_lines(text):
    return [l.strip() for l in text.strip().splitlines() if l.strip()]


def write(path, header, lines):
    path.write_text("# " + header + "\n" + "\n".join(lines) + "\n", encoding="utf-8")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", required=True)
    ap.add_argument("--inflections", required=True)
    ap.add_argument("--mime", default="/etc/mime.types")
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "crates/core/data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)

    raw = pathlib.Path(args.words).read_text(encoding="utf-8").split()
    words, seen = [], set()
    for w in raw:
        w = w.strip().lower()
        if not w or not re.fullmatch(r"[a-z]+", w):
            continue
        if len(w) == 1 and w not in ("a", "i"):
            continue
        if w in seen:
            continue
        seen.add(w)
        words.append(w)
    rank = {w: i + 1 for i, w in enumerate(words)}
    write(out / "words_by_frequency.txt",
          "English words ordered most-frequent-first (line order = rank). Derived from the wordninja list (MIT).",
          words)

    # extensions
    exts = set()
    for line in pathlib.Path(args.mime).read_text().splitlines():
        if line.startswith("#"):
            continue
        parts = line.split()
        for e in parts[1:]:
            e = e.lower()
            if re.fullmatch(r"[a-z0-9]+", e):
                exts.add(e)
    exts = {e for e in exts if not (e.isalpha() and len(e) >= 3 and rank.get(e, 10**9) < 5000 and e not in KEEP_EXT)}
    exts.discard("a")
    exts.update(EXTRA_EXT)
    write(out / "extensions.txt", "Common file extensions (without the leading dot).", sorted(exts))

    write(out / "crud.txt", "Verb tokens that denote CRUD operations when used in a URI.", CRUD)

    def inflections(t):
        forms = {t + "s", t + "es", t + "ed", t + "ing", t + t[-1] + "ing", t + t[-1] + "ed"}
        if t.endswith("e"):
            forms |= {t + "d", t[:-1] + "ing"}
        return forms

    allowed = set(CRUD_EXTRA_ALLOWED)
    for w in words:
        for t in CRUD:
            if t in w and len(w) >= len(t) + 2 and w not in inflections(t):
                allowed.add(w)
    for t in CRUD:
        allowed.discard(t)
    write(out / "crud_allowlist.txt",
          "Words that begin with a CRUD token but are acceptable nouns in URIs.",
          sorted(allowed))

    write(out / "irregular_nouns.txt", "singular plural", clean_lines(IRREGULAR))
    inv = sorted(set(clean_lines(INVARIANT)))
    write(out / "invariant_nouns.txt", "Nouns whose singular and plural forms are identical.", inv)
    write(out / "uncountable_nouns.txt",
          "Nouns without a plural form. Optional second column: 'invariant' (usable as plural) or 'singular' (default).",
          clean_lines(UNCOUNTABLE))

    verbs = set()
    with gzip.open(args.inflections, "rt", encoding="utf-8") as f:
        for line in f:
            cols = line.rstrip("\n").split(",")
            if len(cols) < 3 or cols[1] != "verb":
                continue
            for form in [cols[0]] + cols[2:]:
                for v in form.split("/"):
                    v = v.strip()
                    if re.fullmatch(r"[a-z]+", v):
                        verbs.add(v)
    verbs.update(["login", "logout", "signin", "signout", "signup", "unsubscribe",
                  "checkout", "rollback", "undo", "redo", "sync", "resync", "reindex",
                  "upload", "download", "unlock", "unpublish", "deactivate", "reactivate"])
    write(out / "verbs.txt", "English verbs (lemmas and inflected forms). Derived from lemminflect (MIT).", sorted(verbs))

    write(out / "stop_words.txt", "English stop words removed before classification.",
          sorted(set(" ".join(clean_lines(STOP_WORDS)).split())))


if __name__ == "__main__":
    main()
