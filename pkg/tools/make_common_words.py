#!/usr/bin/env python3
"""Build data/common_words.txt from a curated lemma base.

Expands each lemma with regular English inflections so the phrase filter
catches surface forms as well as dictionary forms.
"""

from pathlib import Path

VERBS = """
be have do say get make go know take see come think look want give use find
tell ask work seem feel try leave call need become mean keep let begin help
talk turn start show hear play run move like live believe hold bring happen
write provide sit stand lose pay meet include continue set learn change lead
understand watch follow stop create speak read allow add spend grow open walk
win offer remember love consider appear buy wait serve die send expect build
stay fall cut reach kill remain suggest raise pass sell require report decide
pull return explain hope develop carry break receive agree support hit produce
eat cover catch draw choose cause point listen realize place close involve
increase put describe reduce establish join share visit apply extend improve
plan evaluate test measure compare combine collect select present introduce
investigate examine explore study analyze observe define determine identify
obtain achieve perform indicate demonstrate propose assume discuss estimate
predict express focus limit note occur prepare prevent publish record refer
release remove repeat replace represent result reveal solve train treat
accept access act adapt adjust admit advance affect aim announce answer argue
arrive assess assign attach attempt attend avoid base calculate cancel check
claim clean clear click complete confirm connect contain contribute control
convert copy correct count cross deal deliver deny depend design destroy
divide drop earn employ enable encourage enjoy enter exist expand experience
face fail fill fit fix fly force forget form gain gather generate handle
hang happen hide hire hurt imagine implement imply import improve insist
install intend invite jump lack land laugh lay lie lift link load locate
lock manage mark match matter mention mind miss mix name notice order own
pack paint park participate perform pick plant prefer press print process
promise promote protect prove push react recall recognize recommend refuse
regard register reject relate rely remind rent repair reply request rest
review ride rise roll save search seek settle shake shape shift shoot shut
sign sing sleep slip smile sort sound split spread stick strike succeed
suffer supply suppose survive switch teach tend thank throw touch transfer
transform travel trust understand update upgrade value vary view vote warn
wash wear weigh welcome wish wonder wrap
"""

NOUNS = """
time year people way day man thing woman life child world school state
family student group country problem hand part place case week company
system program question government number night point home water room
mother area money story fact month lot right study book eye job word
business issue side kind head house service friend father power hour game
line end member law car city community name president team minute idea kid
body information back parent face others level office door health person
art war history party result change morning reason research girl guy moment
air teacher force education foot boy age policy process music market sense
nation plan college interest death experience effect use class control care
field development role effort rate heart drug show leader light voice wife
whole police mind price report decision son view relationship town road
arm difference value building action model season society tax director
position player record paper space ground form event official matter center
couple site project activity star table need court oil situation cost
industry figure street image phone data picture practice piece land product
doctor wall patient worker news test movie north love support technology
bed bird attention size rule language approach method feature example
analysis theory structure function pattern source term type unit user
version network design device detail degree domain element energy error
factor goal item knowledge machine material measure memory message mode
object option output input period phase property purpose quality range
resource response score section sequence series session shape signal skill
solution speed stage standard step strategy task technique text tool topic
trade training tree trend trial truth video weight window advantage amount
application argument aspect assumption author balance basis behavior benefit
block board bottom boundary branch bridge budget button camera campaign
capital category cell chain challenge chance channel chapter character
choice claim client code collection column combination comment committee
concept condition conference connection consequence content context contract
copy core corner creation culture currency customer cycle database deal
debate decade definition demand department description direction discussion
distance distribution document dollar draft dream economy edge editor
employee environment equipment estimate evidence exchange exercise
expansion expert explanation expression extension facility failure faith
fear file film firm flow food frame framework fuel future gap gas gift
glass growth guide hair half hall heat height hole holiday hotel husband
impact importance improvement incident income increase instance institute
instruction insurance intention investment island journal judge key
kitchen lab label lack lake leadership league letter library limit list
literature location loss machine magazine majority manager map mass master
meaning media meeting metal middle mile milk mission mistake mixture
moment motion mountain mouth movement muscle museum nature neck newspaper
note notion object occasion ocean offer operation opinion opportunity
option organization owner page pain painting pair panel park partner
path payment peace percentage performance permission phrase plane plant
plate platform pleasure pocket poetry policy pool population port post
pressure principle print priority prison profile profit progress proposal
protection purpose quarter radio rain reaction reality reference region
relation religion rent repair reply request requirement rest restaurant
revenue review reward ring risk river rock roof root route safety salary
sample scale scene schedule science screen sea secret security selection
sentence sign silver sister skin sky software soil sound speaker speech
spirit sport spring square stability staff station status stock stone
store storm strength string style subject success summer sun surface
survey symbol target teacher team temperature theme thought ticket tip
title tone top tour tradition traffic transition transport trouble
uncle union universe university valley variety vehicle venue village
vision visit volume wave wealth weather web weekend wind wine winter
wood worth writer yard youth zone
"""

ADJECTIVES = """
good new first last long great little own other old right big high
different small large next early young important few public bad same able
free sure true full special easy clear recent certain personal open red
difficult available likely short single medical current wrong private past
foreign fine common poor natural significant similar hot dead central happy
serious ready simple left physical general environmental financial blue
democratic dark various entire close legal religious cold final main green
nice huge popular traditional cultural strong possible whole major better
economic military federal international real low national social human local
late hard best political white least such only major deep wide heavy light
quick slow soft loud quiet rich sharp smooth thick thin tight warm weak
wet broad clean complex direct equal exact fair fast flat fresh global
golden grand gross joint junior key lucky mad mass mobile modern moral
mutual narrow neat normal nuclear odd official ongoing online original
overall parallel partial perfect permanent plain pleasant positive potential
practical precise pregnant previous prime prior pure rapid rare raw regular
relative remote rough round royal rural sad safe secret secure senior
sensitive separate severe sick silent silver smart solid sorry southern
spare specific stable standard steady straight strange strict sudden
sufficient suitable super sweet tall technical temporary tiny total tough
typical ultimate unique universal unknown unusual upper urban useful usual
valid valuable vast visible visual vital western wild wise wooden worthy
accurate active actual additional advanced alternative ancient angry
annual anxious appropriate automatic average aware basic beautiful brief
bright brilliant busy calm capable careful cheap chemical civil classic
comfortable commercial competitive concrete confident conscious consistent
constant convenient conventional correct crazy critical crucial curious
daily dangerous dear decent dependent detailed distinct domestic double
dramatic dry dual due dynamic eager eastern effective efficient elderly
electronic emotional empty enormous essential ethnic excellent exciting
expensive experimental explicit extensive external extra extreme familiar
famous fat favorite firm fixed flexible formal fortunate forward frequent
friendly front fun fundamental funny gentle genuine giant glad gold
historic historical honest horizontal ideal immediate immense independent
individual industrial informal inner innocent intense internal invisible
massive mature maximum mean mere mild minimum minor mixed multiple
necessary negative nervous northern notable obvious occasional ordinary
outdoor outer painful pale particular passive patient peaceful plastic
polite powerful precious pretty primary principal probable professional
prominent proper proud psychological quantitative qualitative
reasonable relevant reliable remarkable respective responsible retail
rival robust romantic rubber scientific seasonal secondary selective
sensible sexual shallow shiny significant sincere skilled slight slim
smooth snap soviet spatial spiritual splendid spoken statistical steep
sticky stiff subsequent substantial subtle sufficient sunny superb
superior supreme surprising suspicious systematic tender terminal
terrible theoretical thorough tired tropical ugly unable uncertain
uncomfortable underlying unexpected unfair unhappy unlikely upset
vertical violent virtual vulnerable wealthy weird widespread willing
"""

OTHER = """
very really most more than then them they their there here when where
while after before during under over about above across again against
almost alone already although always among anyone anything anywhere
around because become between beyond cannot everybody everyone everything
everywhere however indeed inside instead maybe meanwhile moreover much
nearly neither nobody none nothing nowhere often otherwise outside
perhaps quite rather sometimes somewhat somewhere soon therefore
throughout together toward unless unlike until upward whatever whenever
wherever whoever within without yesterday today tomorrow never ever
"""


def _forms(lemma: str) -> set[str]:
    out = {lemma}
    # plural / 3rd person
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        out.add(lemma + "es")
    elif lemma.endswith("y") and len(lemma) > 2 and lemma[-2] not in "aeiou":
        out.add(lemma[:-1] + "ies")
    else:
        out.add(lemma + "s")
    # -ed / -ing
    if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        out.add(lemma[:-1] + "ed")
        out.add(lemma[:-1] + "ing")
    elif lemma.endswith("y") and len(lemma) > 2 and lemma[-2] not in "aeiou":
        out.add(lemma[:-1] + "ied")
        out.add(lemma + "ing")
    else:
        out.add(lemma + "ed")
        out.add(lemma + "ing")
    return out


def main() -> None:
    words: set[str] = set()
    for block, inflect in ((VERBS, True), (NOUNS, True), (ADJECTIVES, False), (OTHER, False)):
        for lemma in block.split():
            lemma = lemma.strip().lower()
            if not lemma:
                continue
            if inflect:
                words |= _forms(lemma)
            else:
                words.add(lemma)
    out = Path(__file__).resolve().parent.parent / "src" / "fwminer" / "data" / "common_words.txt"
    header = "# Common English words used to drop single-token phrase candidates.\n"
    out.write_text(header + "\n".join(sorted(words)) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} words to {out}")


if __name__ == "__main__":
    main()
