#!/usr/bin/env python3
"""Generates the bundled text corpora (deterministic, seeded).

Outputs:
  data/model_corpus.txt   word-model training text, >= 12000 words
  data/corpus/*.txt       20 topic documents used by the experiment harness

Plain ASCII, LF line endings. The model corpus keeps sentence periods
attached to words so period-suffixed forms enter the vocabulary.
"""

import random
import textwrap
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
RNG = random.Random(20260815)

SURVEY = {
    "nouns": """parcel boundary meadow orchard station marker transect basin
        channel terrace grove paddock hedgerow culvert weir footpath cairn
        quadrat ledger folio appendix schedule almanac enclosure bank ditch
        copse spinney ford sluice drain headland furlong acre plot verge
        margin hollow ridge knoll spring pond outfall crossing stile gate""".split(),
    "verbs_s": """describes records lists notes marks traces covers bounds
        crosses follows measures reports shows indicates summarizes names
        locates separates joins drains borders encloses""".split(),
    "verbs_pl": """describe record list note mark trace cover bound cross
        follow measure report show indicate summarize name locate separate
        join drain border enclose""".split(),
    "adjs": """northern southern eastern western upper lower outer inner
        broad narrow gravel clay loam alder willow oak stone brick timber
        walled sunken raised open shaded level sloping wet dry rough smooth
        old new long short double single""".split(),
    "agents": """the surveyor the clerk the warden the assistant the steward
        the recorder the bailiff the reeve""".split("\n"),
}
SURVEY["agents"] = [a.strip() for a in SURVEY["agents"]]

FRAMES_S = [
    "The {adj} {noun} {verb_s} the {adj2} {noun2} near the {noun3}.",
    "The {noun} {verb_s} the {noun2} along its {adj} side.",
    "{agent} {verb_s} the {adj} {noun} in the margin of the {noun2}.",
    "The {adj} {noun} {verb_s} both the {noun2} and the {noun3}.",
    "Beyond the {noun3} the {adj} {noun} {verb_s} a {adj2} {noun2}.",
    "Each entry {verb_s} one {noun} and its {adj} {noun2}.",
    "A {adj} {noun} {verb_s} the route between the {noun2} and the {noun3}.",
    "The later pages {verb_pl2} how the {noun} {verb_s} the {adj} {noun2}.",
]
FRAMES_PL = [
    "The survey records describe the {adj} {noun} and the {noun2}.",
    "Field parties {verb_pl} the {noun} before they {verb_pl2} the {noun2}.",
    "The records {verb_pl} every {noun} from the {noun2} to the {noun3}.",
    "Earlier volumes {verb_pl} the {adj} {noun} under a different name.",
    "Most entries {verb_pl} the {noun} twice and {verb_pl2} the {adj} {noun2} once.",
    "The appended tables {verb_pl} each {noun} by its {adj} {noun2}.",
    "Notes in the margin {verb_pl} a {adj} {noun} beside the {noun2}.",
    "The survey records describe each {noun} in turn.",
]
CONNECT = [
    "The same hand added a figure for the {noun}.",
    "No width is given for the {noun2}.",
    "The ink fades where the {noun} meets the {noun2}.",
    "A later note corrects the spelling of the {noun3}.",
    "Two figures disagree about the {adj} {noun}.",
    "The facing page repeats the total for the {noun2}.",
]


def fill(frame, pools):
    words = {
        "noun": RNG.choice(pools["nouns"]),
        "noun2": RNG.choice(pools["nouns"]),
        "noun3": RNG.choice(pools["nouns"]),
        "adj": RNG.choice(pools["adjs"]),
        "adj2": RNG.choice(pools["adjs"]),
        "verb_s": RNG.choice(pools["verbs_s"]),
        "verb_pl": RNG.choice(pools["verbs_pl"]),
        "verb_pl2": RNG.choice(pools["verbs_pl"]),
        "agent": RNG.choice(pools.get("agents", ["the clerk"])),
    }
    out = frame.format(**words)
    return out[0].upper() + out[1:]


def paragraph(pools, n_sentences):
    frames = FRAMES_S + FRAMES_PL + CONNECT
    return " ".join(fill(RNG.choice(frames), pools) for _ in range(n_sentences))


def gen_model_corpus():
    paras = []
    words = 0
    while words < 13000:
        p = paragraph(SURVEY, RNG.randint(4, 8))
        paras.append(p)
        words += len(p.split())
    text = "\n\n".join(textwrap.fill(p, width=80) for p in paras) + "\n"
    assert all(ord(c) < 128 for c in text)
    assert len(text.split()) >= 12000
    (ROOT / "data").mkdir(exist_ok=True)
    (ROOT / "data" / "model_corpus.txt").write_text(text, newline="\n")
    print("model_corpus.txt:", len(text.split()), "words")


TOPICS = {
    "harbor_dredging": (
        "Notes on the harbor dredging season",
        """berth channel mooring breakwater quay fairway buoy spoil barge
           dredger anchorage pontoon jetty slipway basin lock caisson""",
        """silt tide survey depth draught clearance passage schedule""",
    ),
    "orchard_rootstock": (
        "Orchard rootstock trials, east block",
        """rootstock scion graft row block trellis windbreak cultivar
           seedling stake canopy spur bud union stock nursery""",
        """vigor yield spacing pruning blossom thinning harvest storage""",
    ),
    "lighthouse_supply": (
        "Lighthouse supply runs and keeper rotations",
        """tender lantern wick keeper gallery tower landing derrick stores
           cistern paraffin lens clockwork shutter dwelling boathouse""",
        """rotation passage weather swell ration signal logbook relief""",
    ),
    "letterpress_shop": (
        "Inventory of the letterpress shop",
        """chase quoin galley forme platen frisket tympan composing stick
           type case furniture reglet brayer roller imposing stone""",
        """impression spacing leading setting proof makeready batch lockup""",
    ),
    "moorland_drainage": (
        "Moorland drainage and grip blocking",
        """grip peat hag gully sphagnum bund dam runnel mire flush
           watershed cotton grass heather tussock culvert outfall""",
        """rewetting survey baseline transect monitoring restoration flow""",
    ),
    "archive_rebinding": (
        "Rebinding schedule for the parish archive",
        """quire folio vellum gathering spine sewing support board clasp
           endpaper headband gutter foliation register bifolium booklet""",
        """condition collation repair conservation boxing listing imaging""",
    ),
    "canal_maintenance": (
        "Canal maintenance stoppages, winter works",
        """lock gate paddle cill balance beam pound winding hole towpath
           wash wall coping culvert bywash weir gauging stop plank""",
        """stoppage dewatering inspection repointing leakage schedule""",
    ),
    "observatory_logs": (
        "Transcribing the observatory logs",
        """transit micrometer eyepiece collimation azimuth meridian clock
           barometer thermometer dome shutter pier mounting graduation""",
        """observation correction reduction seeing record timing error""",
    ),
    "saltmarsh_grazing": (
        "Saltmarsh grazing agreements",
        """fleet creek pan samphire sward stint common marsh wall borrow
           dyke counter wall staithe saltings breach drove gateway""",
        """grazing stocking tenancy agreement season flooding access""",
    ),
    "foundry_patterns": (
        "Foundry pattern store catalogue",
        """pattern coreb mould flask cope drag runner riser gate sprue
           loam chaplet draft taper shrinkage allowance fillet""",
        """casting batch reference storage loan issue condition scrap""",
    ),
    "railway_gradients": (
        "Gradient post survey on the branch line",
        """gradient post milepost cutting embankment ballast sleeper chair
           fishplate culvert overbridge cess formation datum peg""",
        """survey level measurement renewal alignment settlement record""",
    ),
    "bee_apiary": (
        "Apiary inspection rounds",
        """hive brood frame super queen excluder entrance floor crownboard
           comb forage cluster colony nucleus stand smoker""",
        """inspection feeding temper disease swarm harvest weight note""",
    ),
    "reservoir_draw": (
        "Reservoir drawdown readings",
        """valve tower scour pipe spillway crest gauge board stilling basin
           draw off embankment puddle core wave wall bellmouth""",
        """drawdown level compensation flow reading rainfall storage""",
    ),
    "canvas_sailloft": (
        "Sail loft work book",
        """bolt rope cringle clew luff leech tabling seam grommet
           canvas needle palm twine batten eyelet reef point""",
        """stitching repair order measurement delivery patching finish""",
    ),
    "quarry_faces": (
        "Quarry face measurements",
        """face bench overburden joint seam block gullet incline tramway
           crusher stockpile sett kerb scappling bank pillar""",
        """extraction measurement yield waste dressing output blasting""",
    ),
    "mill_leat": (
        "Mill leat flow agreement",
        """leat hatch launder wheel pit trough sluice penstock tailrace
           header pond weir board grating spindle gudgeon""",
        """flow share rotation repair silt clearance agreement dispute""",
    ),
    "herbarium_sheets": (
        "Mounting the herbarium sheets",
        """specimen sheet capsule label determination folder genus cover
           flimsy mount strap fragment packet accession stamp""",
        """mounting ordering incorporation loan exchange curation listing""",
    ),
    "coastal_groynes": (
        "Coastal groyne condition survey",
        """groyne pile plank walings kingpost beach crest toe scour apron
           revetment outflank drift cell ridge runnel""",
        """condition monitoring erosion accretion profile repair rating""",
    ),
    "brewery_cooperage": (
        "Cooperage returns for the brewery",
        """cask stave hoop head croze chime bung shive keystone firkin
           kilderkin barrel hogshead truss adze jigger""",
        """return repair seasoning inspection leakage branding tally""",
    ),
    "telegraph_lines": (
        "Telegraph line fault book",
        """pole arm insulator stay wire span joint earth battery relay
           sounder galvanometer terminal circuit route bracket""",
        """fault test resistance contact clearance renewal patrol""",
    ),
}

TOPIC_FRAMES = [
    "The {n1} beside the {n2} needs attention before the {t1} can begin.",
    "Last season the {n1} was rebuilt, and the {t1} improved at once.",
    "A note against the {n1} questions the {t1} figure for the {n2}.",
    "Work on the {n1} and the {n2} continued through the wet weeks.",
    "The {t1} of the {n1} was checked twice against the older book.",
    "Nobody could say when the {n2} had last carried a proper {t1}.",
    "The foreman set two men to the {n1} while the rest cleared the {n2}.",
    "Entries for the {n1} run short after the second year of {t1}.",
    "Where the {n1} meets the {n2}, the {t1} has always been difficult.",
    "The {t2} column lists the {n1} first and the {n2} after it.",
    "By agreement the {t1} is read monthly at the {n1}.",
    "The {n3} was moved nearer the {n2} to simplify the {t2}.",
    "An older hand recorded the {t1} differently for every {n1}.",
    "The {n1}, the {n2}, and the {n3} appear on the same folded sheet.",
]


def gen_topic_doc(name, title, nouns, terms):
    nouns = nouns.split()
    terms = terms.split()
    paras = []
    total = 0
    while total < 3300 or len(paras) < 7:
        sents = []
        for _ in range(RNG.randint(4, 6)):
            s = RNG.choice(TOPIC_FRAMES).format(
                n1=RNG.choice(nouns), n2=RNG.choice(nouns), n3=RNG.choice(nouns),
                t1=RNG.choice(terms), t2=RNG.choice(terms))
            sents.append(s[0].upper() + s[1:])
        paras.append(" ".join(sents))
        total += len(paras[-1])
    body = "\n\n".join(textwrap.fill(p, width=72) for p in paras)
    text = title + "\n\n" + body + "\n"
    assert all(ord(c) < 128 for c in text)
    assert len(text) >= 3000, (name, len(text))
    out = ROOT / "data" / "corpus" / f"{name}.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, newline="\n")
    return len(text)


def main():
    gen_model_corpus()
    sizes = [gen_topic_doc(n, *spec) for n, spec in sorted(TOPICS.items())]
    print(f"{len(sizes)} topic docs, {min(sizes)}..{max(sizes)} bytes")


if __name__ == "__main__":
    main()
