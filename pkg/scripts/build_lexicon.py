#!/usr/bin/env python3
"""Regenerate the bundled coarse POS lexicon and stopword list.

The lexicon maps each word form to its most frequent coarse tag. Base word
lists are embedded below; verb and noun inflections are expanded with
standard orthographic rules plus explicit irregular tables. On conflicts the
earlier (higher-priority) class wins: pronouns, function words, verbs,
adjectives, adverbs, nouns.

Usage: python scripts/build_lexicon.py
Writes src/matchprobe/tagging/data/{lexicon.tsv,stopwords.txt}.
"""

from __future__ import annotations

from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "matchprobe" / "tagging" / "data"

PRONOUNS = """
i you he she it we they me him her us them my your his its our their
mine yours hers ours theirs myself yourself himself herself itself
ourselves yourselves themselves who whom whoever whomever anybody anyone
anything everybody everyone everything nobody somebody someone something
nothing none oneself
""".split()

FUNCTION_WORDS = """
a an the and or but nor if because although though while whereas unless
until till since when whenever where wherever why how that which whose what
whatever whichever of in on at by for with about against between among into
through during before after above below to from up down out off over under
across along around behind beside besides beyond despite except inside
outside onto upon toward towards underneath within without per via versus
as than can could may might must shall should will would ought this these
those each every either neither both all any some several more most less
least much many few enough such same own other another else plus minus
worth amid amidst atop aboard concerning regarding throughout unto whilst
albeit lest whether yes
""".split()

# Irregular verbs: every listed form is tagged VB.
IRREGULAR_VERBS = """
be is am are was were been being
have has had having
do does did done doing
say says said saying
go goes went gone going
get gets got gotten getting
make makes made making
know knows knew known knowing
think thinks thought thinking
take takes took taken taking
see sees saw seen seeing
come comes came coming
find finds found finding
give gives gave given giving
tell tells told telling
become becomes became becoming
show shows showed shown showing
leave leaves left leaving
feel feels felt feeling
put puts putting
bring brings brought bringing
begin begins began begun beginning
keep keeps kept keeping
hold holds held holding
write writes wrote written writing
stand stands stood standing
hear hears heard hearing
let lets letting
mean means meant meaning
set sets setting
meet meets met meeting
run runs ran running
pay pays paid paying
sit sits sat sitting
speak speaks spoke spoken speaking
lie lies lay lain lying
lead leads led leading
read reads reading
grow grows grew grown growing
lose loses lost losing
fall falls fell fallen falling
send sends sent sending
build builds built building
understand understands understood understanding
draw draws drew drawn drawing
break breaks broke broken breaking
spend spends spent spending
cut cuts cutting
rise rises rose risen rising
drive drives drove driven driving
buy buys bought buying
wear wears wore worn wearing
choose chooses chose chosen choosing
seek seeks sought seeking
throw throws threw thrown throwing
catch catches caught catching
deal deals dealt dealing
win wins won winning
forget forgets forgot forgotten forgetting
sell sells sold selling
fight fights fought fighting
eat eats ate eaten eating
teach teaches taught teaching
sing sings sang sung singing
swim swims swam swum swimming
fly flies flew flown flying
drink drinks drank drunk drinking
ride rides rode ridden riding
shake shakes shook shaken shaking
steal steals stole stolen stealing
sleep sleeps slept sleeping
wake wakes woke woken waking
swear swears swore sworn swearing
tear tears tore torn tearing
bend bends bent bending
bite bites bit bitten biting
blow blows blew blown blowing
dig digs dug digging
feed feeds fed feeding
freeze freezes froze frozen freezing
hang hangs hung hanging
hide hides hid hidden hiding
hit hits hitting
hurt hurts hurting
lend lends lent lending
quit quits quitting
shine shines shone shining
shoot shoots shot shooting
shut shuts shutting
spread spreads spreading
strike strikes struck striking
sweep sweeps swept sweeping
""".split()

# Regular verbs, expanded to -s / -ing / -ed forms below.
REGULAR_VERBS = """
accept achieve act add admire admit advise agree aim allow announce answer
appear appreciate approach approve argue arrange arrive ask assist assume
attach attack attempt attend avoid bake balance ban base battle behave
believe belong blame boil borrow bother bounce bow brake branch breathe
brush burn calculate call camp care carry cause celebrate challenge change
charge chase chat check cheer chew claim clean clear climb close collect
comb combine compare compete complain complete concern confirm connect
consider consist contain continue control cook copy correct count cover
crash create cross cry damage dance dare decide declare decorate delay
deliver demand deny depend describe deserve destroy develop disagree
disappear discover discuss divide double doubt drag dream dress drop dry
earn echo edit educate elect employ empty encourage enjoy enter escape
estimate examine exercise exist expand expect explain explore express
extend face fail fasten fear fetch file fill film fire fix float flood
flow fold follow force form frame frighten fry gain gather gaze glance
glow grab greet guard guess guide handle happen harm hate head heal heat
help hire hope hug hunt hurry identify ignore imagine impress improve
include increase influence inform injure intend interest interrupt
introduce invent invite involve iron join joke judge jump kick kill kiss
knock label land last laugh launch learn level lick lift like list listen
live load lock look love manage march mark marry match matter measure melt
mention mind miss mix move murder name need note notice number obey object
observe obtain occur offer open order owe own pack paint park pass pause
perform pick place plan plant play please point polish possess post pour
practice praise prefer prepare present press pretend prevent print produce
promise protect provide pull pump punch punish push question race rain
raise reach realize receive recognize record reduce refer reflect refuse
regret reject relate relax release remain remember remind remove rent
repair repeat replace reply report request require rescue resist rest
return review reward risk rock roll rub ruin rule rush sail save scan
scare scatter scream seal search seem select sense separate serve settle
share shave shock shop shout sigh sign signal ski skip slip smash smell
smile smoke snap sneeze soak sob solve sort sound spare spark spell spill
spoil spot spray squeeze stamp stare start state stay step stir stop store
stretch strip study stuff succeed suffer suggest suit supply support
suppose surprise surround survive suspect talk tap taste tease test thank
tick tie tip touch tour trace trade train travel treat trick trip trust
try turn twist type unite unlock use vanish visit vote wait walk want warm
warn wash waste watch water wave weigh welcome whisper whistle wish wonder
work worry wrap wreck yawn yell
""".split()

# Final consonant doubles before -ing/-ed.
DOUBLING = set(
    """
    ban chat control drag drop grab hug occur plan prefer refer regret rub
    scan shop skip slip snap stop step stir tap trip wrap
    """.split()
)

ADJECTIVES = """
good bad big small large little long short tall high low wide narrow thick
thin heavy light fast slow quick early late new old young ancient modern
recent fresh stale clean dirty neat messy tidy empty full open closed free
busy cheap expensive rich poor strong weak hard soft smooth rough sharp
dull bright dark pale colorful loud quiet silent noisy hot cold warm cool
dry wet damp humid sunny cloudy rainy snowy windy stormy foggy icy happy
sad glad cheerful joyful miserable angry furious calm peaceful nervous
anxious worried afraid scared terrified brave bold shy timid proud humble
jealous envious grateful thankful hopeful hopeless careful careless
curious bored boring interesting exciting excited amazing wonderful
terrible horrible awful pleasant unpleasant beautiful pretty handsome ugly
attractive elegant graceful awkward clumsy smart clever intelligent wise
foolish stupid dumb brilliant talented skillful capable able unable
possible impossible likely unlikely certain uncertain sure unsure true
false real fake genuine honest dishonest loyal faithful reliable
unreliable responsible serious funny humorous silly ridiculous strange
weird odd normal usual unusual common rare unique special ordinary typical
familiar foreign local national international global public private
personal social political economic financial legal illegal official formal
informal casual polite rude friendly unfriendly kind cruel gentle harsh
generous selfish greedy patient impatient tolerant strict lenient fair
unfair equal unequal similar different opposite separate whole entire
complete incomplete perfect imperfect pure simple complex complicated easy
difficult tough tricky safe dangerous risky secure healthy sick ill
painful painless alive dead deadly fatal tired exhausted sleepy awake
asleep hungry thirsty delicious tasty bitter sweet sour salty spicy bland
ripe raw golden wooden woolen deep shallow steep flat round circular
triangular rectangular oval straight curved crooked vertical horizontal
parallel distant remote nearby adjacent central northern southern eastern
western inner outer internal external upper lower middle main major minor
primary secondary important unimportant necessary unnecessary essential
optional useful useless valuable worthless precious effective ineffective
efficient inefficient powerful powerless successful unsuccessful famous
unknown popular unpopular favorite excellent great fine average moderate
extreme intense mild severe slight gradual sudden immediate instant
permanent temporary constant frequent occasional regular irregular steady
stable unstable flexible rigid firm loose tight solid hollow dense sparse
crowded vacant available absent ready willing reluctant eager keen
enthusiastic passionate devoted ambitious confident insecure optimistic
pessimistic realistic practical creative imaginative innovative
traditional conventional radical conservative liberal independent
dependent mutual voluntary automatic mechanical electrical electronic
digital virtual actual visible invisible obvious subtle vague precise
accurate inaccurate exact approximate relevant irrelevant significant
trivial disappointed disappointing upbeat satisfied satisfying annoyed
annoying confused confusing surprised surprising shocked shocking
embarrassed embarrassing ashamed guilty innocent unhappy unsafe
unlucky lucky blue red green yellow
black white gray brown pink purple orange tiny huge enormous massive giant
vast broad slim skinny fat plump muscular fit athletic blind deaf mute
lame bald hairy furry feathered striped spotted plain fancy luxurious
modest humble grand magnificent splendid gorgeous stunning dazzling shiny
glossy matte rusty dusty muddy sandy rocky grassy leafy flowery fragrant
smelly stinky fishy salty sugary creamy crispy crunchy chewy tender juicy
dried canned organic artificial synthetic natural wild tame domestic
urban rural suburban coastal tropical polar arctic continental alien
native ancient medieval renaissance industrial agricultural commercial
residential educational medical dental surgical optical audible edible
drinkable washable portable foldable reusable disposable recyclable
toxic poisonous harmless harmful beneficial productive counterproductive
profitable affordable priceless overpriced discounted complimentary
mandatory compulsory forbidden prohibited permitted allowed eligible
ineligible qualified unqualified experienced inexperienced skilled
unskilled amateur professional veteran junior senior chief deputy
assistant formerly
""".split()

IRREGULAR_ADVERBS = """
very quite too so now then here there always never often sometimes usually
rarely seldom soon already yet still just almost rather pretty well fast
hard late early today tomorrow yesterday tonight together apart away back
forward ahead abroad anywhere everywhere nowhere somewhere indeed instead
maybe perhaps somewhat twice once again ever even far near else not
meanwhile moreover furthermore nevertheless nonetheless otherwise
therefore thus hence anyway anyhow somehow aloud overseas downtown
upstairs downstairs indoors outdoors overnight halfway sideways backwards
forwards inward outward upward downward eastward westward northward
southward
""".split()

NOUNS = """
time year month week day hour minute second moment morning afternoon
evening night midnight noon decade century season spring summer autumn
winter date schedule deadline era period anniversary birthday holiday
weekend calendar future past present history man woman child boy girl
person people family friend neighbor parent mother father brother sister
uncle aunt cousin nephew niece grandmother grandfather grandson
granddaughter husband wife baby infant toddler teenager adult elder
stranger guest visitor customer client worker employee employer manager
director president king queen prince princess emperor soldier officer
police doctor nurse dentist surgeon teacher professor student pupil
lawyer judge jury witness artist painter musician singer dancer actor
actress writer author poet journalist reporter editor photographer
scientist researcher engineer architect designer programmer pilot driver
sailor captain farmer fisherman hunter chef cook waiter waitress barber
butcher baker tailor carpenter plumber electrician mechanic librarian
clerk secretary accountant banker merchant trader athlete player coach
referee champion audience crowd team committee staff crew population
citizen immigrant refugee tourist passenger pedestrian owner tenant
landlord thief criminal prisoner guard victim hero villain leader
follower member partner colleague rival enemy ally expert beginner
volunteer candidate applicant graduate intern apprentice specialist
consultant advisor agent representative ambassador minister senator
mayor governor chancellor treasurer chairman spokesman gentleman lady
sir madam fellow buddy pal companion acquaintance house home apartment
building tower castle palace cottage cabin hut tent farm barn garden
yard park playground school university college library museum gallery
theater cinema stadium gym pool hospital clinic pharmacy church temple
mosque cathedral office factory warehouse shop store market mall
restaurant cafe bar hotel inn station airport harbor port dock bridge
road street avenue lane alley highway path trail sidewalk corner square
plaza city town village suburb neighborhood district region county state
country nation continent border capital kingdom empire island peninsula
coast beach shore cliff mountain hill valley canyon desert forest jungle
meadow field prairie swamp river stream creek lake pond ocean sea bay
waterfall cave volcano glacier earth world planet moon star sun sky
galaxy universe horizon ground soil land territory zone area site
location spot position direction north south east west center edge
boundary limit surface bottom top side front rear interior exterior
entrance exit doorway hallway corridor lobby basement attic garage
balcony porch terrace roof ceiling floor wall window door gate fence
chimney stair staircase elevator escalator table chair desk bed sofa
couch bench shelf cabinet drawer closet wardrobe mirror lamp candle clock
watch picture painting photograph sculpture statue frame carpet rug
curtain blanket pillow mattress sheet towel soap shampoo toothbrush
toothpaste razor scissors knife fork spoon plate bowl cup mug glass
bottle jar pot pan kettle oven stove refrigerator freezer microwave
dishwasher sink faucet bucket basket bag backpack suitcase luggage wallet
purse umbrella key hammer screwdriver wrench drill nail screw bolt rope
chain wire cable tool instrument machine engine motor wheel tire pedal
handle button switch plug socket battery bulb flashlight lantern
telescope microscope camera radio television computer laptop keyboard
screen monitor printer scanner phone telephone charger headphone speaker
microphone device gadget appliance furniture equipment hardware software
program application website network internet email password account file
folder document page paragraph sentence word letter alphabet symbol
number digit figure chart graph diagram map globe atlas book novel
magazine newspaper journal article essay report thesis dictionary
encyclopedia manual guide recipe menu ticket receipt invoice bill coupon
stamp envelope package parcel box container crate barrel tank pipe tube
hose funnel filter pump valve gear lever spring screen panel board plank
beam pillar column brick stone rock pebble gravel sand dust mud clay
cement concrete marble granite metal iron steel copper bronze silver
gold aluminum tin lead zinc wood timber lumber bamboo plastic rubber
leather cloth fabric cotton wool silk linen thread needle pin ribbon
string lace zipper pocket sleeve collar cuff shirt blouse sweater jacket
coat vest suit dress skirt trouser jean short sock stocking shoe boot
sandal slipper hat cap helmet scarf glove mitten belt tie bow crown ring
necklace bracelet earring jewel gem diamond pearl ruby emerald sapphire
food meal breakfast lunch dinner supper snack appetizer dessert dish
cuisine bread toast sandwich burger pizza pasta noodle rice grain wheat
corn oat barley flour dough pastry cake cookie biscuit pie tart pudding
chocolate candy sugar honey syrup jam butter cheese cream milk yogurt
egg meat beef pork lamb chicken turkey duck sausage bacon ham steak
fish salmon tuna shrimp crab lobster oyster vegetable salad soup stew
potato tomato onion garlic carrot cabbage lettuce spinach broccoli
cucumber pepper pumpkin bean pea lentil mushroom fruit apple banana
grape cherry peach pear plum apricot melon watermelon pineapple mango
papaya kiwi lemon lime grapefruit berry strawberry blueberry raspberry
nut almond walnut peanut cashew coffee tea juice soda lemonade wine
beer whiskey vodka cocktail beverage drink water ice steam smoke flame
fire ash coal fuel gasoline petroleum oil gas electricity energy power
light shadow darkness heat warmth cold frost snow rain drizzle shower
storm thunder lightning wind breeze gale hurricane tornado cyclone
blizzard fog mist dew humidity climate weather temperature degree
pressure forecast body head face forehead eye eyebrow eyelash ear nose
nostril cheek chin jaw mouth lip tongue tooth throat neck shoulder arm
elbow wrist hand palm finger thumb nail chest breast rib lung heart
stomach belly waist hip leg thigh knee ankle foot heel toe skin flesh
muscle bone skeleton spine skull brain nerve vein artery blood cell
organ kidney liver gland hair beard mustache wrinkle dimple freckle
scar wound bruise injury illness disease infection fever cough sneeze
headache toothache medicine pill tablet vaccine bandage surgery therapy
treatment cure remedy diagnosis symptom patient health fitness exercise
diet nutrition vitamin protein calorie animal creature beast mammal
bird reptile insect fish whale dolphin shark octopus squid jellyfish
seal walrus penguin eagle hawk owl crow raven sparrow robin pigeon dove
parrot peacock swan goose hen rooster chick ostrich flamingo stork
crane heron dog puppy cat kitten horse pony donkey mule cow bull calf
ox sheep goat pig piglet rabbit hare squirrel chipmunk mouse rat
hamster hedgehog bat wolf fox bear deer elk moose bison buffalo camel
llama giraffe elephant rhinoceros hippopotamus lion tiger leopard
cheetah jaguar panther monkey ape gorilla chimpanzee baboon kangaroo
koala panda sloth otter beaver raccoon skunk badger weasel ferret
snake cobra python viper lizard gecko iguana chameleon crocodile
alligator turtle tortoise frog toad salamander newt spider scorpion
ant bee wasp hornet beetle butterfly moth caterpillar dragonfly
grasshopper cricket mosquito flea tick worm snail slug crab plant tree
bush shrub hedge vine grass weed moss fern flower blossom petal stem
stalk branch twig leaf root bark trunk seed sprout bud fruit nut cone
oak pine maple birch cedar willow palm cactus rose tulip lily daisy
sunflower orchid violet jasmine lavender work job career occupation
profession task duty responsibility assignment project mission
errand chore labor effort attempt achievement accomplishment success
failure mistake error fault defect flaw blunder accident incident
event occasion ceremony celebration festival parade carnival party
banquet feast wedding funeral reunion meeting conference seminar
workshop session interview appointment visit trip journey voyage tour
expedition adventure vacation picnic excursion ride walk hike climb
race marathon competition contest tournament match game sport soccer
football basketball baseball tennis golf hockey volleyball badminton
cricket rugby boxing wrestling swimming diving skiing skating cycling
running jogging yoga chess puzzle riddle toy doll kite balloon drum
guitar piano violin cello flute trumpet saxophone harmonica harp organ
melody tune rhythm beat harmony chord note song anthem lullaby opera
concert orchestra band choir dance ballet waltz tango performance show
play drama comedy tragedy scene act stage curtain costume makeup mask
role character plot script dialogue audience applause money cash coin
currency dollar euro pound penny cent fortune wealth treasure budget
income salary wage fee fare price cost expense tax debt loan mortgage
interest profit loss revenue fund investment stock share bond market
trade commerce business company corporation firm enterprise industry
agency branch headquarters department division unit sector bank vault
safe deposit withdrawal payment purchase sale bargain discount refund
exchange delivery shipment cargo freight import export supply demand
product goods merchandise commodity brand label trademark patent
license contract agreement deal negotiation partnership merger idea
concept theory fact truth opinion belief faith knowledge wisdom
insight intuition logic reason sense thought memory imagination
creativity inspiration motivation ambition desire wish hope fear
worry anxiety stress relief comfort joy happiness pleasure delight
satisfaction pride shame guilt regret sorrow grief sadness misery
despair anger rage fury jealousy envy hatred love affection passion
emotion feeling mood temper attitude behavior habit custom tradition
culture religion philosophy science mathematics physics chemistry
biology geology astronomy geography economics psychology sociology
anthropology archaeology linguistics literature poetry prose grammar
vocabulary language dialect accent speech lecture debate discussion
conversation argument statement announcement declaration proclamation
speech rumor gossip news information data evidence proof clue hint
suggestion advice recommendation warning threat promise oath vow
pledge excuse apology complaint request demand question answer reply
response solution problem issue matter topic subject theme thesis
summary conclusion introduction chapter section verse stanza rhyme
story tale legend myth fable fantasy mystery thriller romance fiction
biography autobiography memoir diary log record archive registry list
catalog inventory index menu agenda plan strategy tactic scheme
design pattern model prototype sample specimen example instance case
situation circumstance condition status quality quantity amount
portion fraction percentage ratio rate speed velocity acceleration
distance length width height depth weight mass volume capacity size
dimension scale degree level grade rank standard criterion measure
unit meter kilometer centimeter millimeter mile yard inch gallon
liter ounce gram kilogram ton dozen pair couple group bunch bundle
stack pile heap cluster collection set series sequence chain cycle
loop round stage phase step process procedure method technique
approach system structure framework foundation base core essence
element component ingredient factor feature aspect attribute
property characteristic trait detail item object thing stuff
material substance matter particle atom molecule electron proton
neutron nucleus ion compound mixture solution liquid gas vapor
crystal mineral ore fossil specimen organism bacteria virus gene
chromosome species breed variety type kind sort category class
order genus family tribe clan generation ancestor descendant heir
heritage legacy inheritance tradition government law rule regulation
policy legislation constitution amendment statute ordinance decree
verdict sentence penalty fine punishment prison jail court trial
hearing lawsuit case appeal justice liberty freedom right privilege
duty obligation vote election campaign ballot poll democracy republic
monarchy dictatorship parliament congress senate assembly council
cabinet ministry bureau commission authority administration regime
army navy battalion regiment squad troop fleet weapon gun rifle
pistol cannon missile bomb grenade sword dagger spear shield armor
battle war conflict invasion siege ambush raid attack defense
victory defeat surrender truce treaty peace alliance rebellion
revolution riot protest strike uprising
""".split()

NO_PLURAL = set(
    """
    people police staff information knowledge wisdom advice news money
    cash wealth furniture equipment hardware software luggage electricity
    energy water ice steam smoke milk butter cheese bread rice wheat corn
    flour sugar honey meat beef pork lamb bacon ham blood hair fog mist
    snow rain thunder lightning weather health fitness fun chess yoga
    physics mathematics chemistry biology geology astronomy geography
    economics psychology sociology anthropology archaeology linguistics
    literature poetry prose grammar justice liberty freedom peace
    happiness sadness anger love hatred stress grief despair pride
    guilt courage patience violence traffic homework housework feedback
    research progress evidence proof gossip clothing jewelry machinery
    scenery bravery laughter applause
    """.split()
)

IRREGULAR_PLURALS = {
    "man": "men",
    "woman": "women",
    "child": "children",
    "person": "persons",
    "foot": "feet",
    "tooth": "teeth",
    "goose": "geese",
    "mouse": "mice",
    "ox": "oxen",
    "sheep": "sheep",
    "deer": "deer",
    "fish": "fish",
    "species": "species",
    "series": "series",
    "leaf": "leaves",
    "knife": "knives",
    "wife": "wives",
    "wolf": "wolves",
    "shelf": "shelves",
    "thief": "thieves",
    "life": "lives",
    "half": "halves",
    "calf": "calves",
    "loaf": "loaves",
    "gentleman": "gentlemen",
    "chairman": "chairmen",
    "spokesman": "spokesmen",
    "fisherman": "fishermen",
}

STOPWORDS = """
a an the and or but nor so yet if then else when while where why how what
which who whom whose that this these those i you he she it we they me him
her us them my your his its our their mine yours hers ours theirs myself
yourself himself herself itself ourselves yourselves themselves am is are
was were be been being have has had having do does did doing will would
shall should can could may might must ought not no of in on at by for
with about against between among into through during before after above
below to from up down out off over under again further once here there
all any both each few more most other some such only own same than too
very just now also as until because although though unless since per via
upon onto toward towards across along around behind beside beyond despite
except inside outside within without well ever never always often indeed
rather quite
""".split()


def _plural(noun: str) -> str | None:
    if noun in NO_PLURAL:
        return None
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith("o") and noun in {"hero", "potato", "tomato", "echo", "volcano", "torpedo"}:
        return noun + "es"
    return noun + "s"


def _verb_forms(verb: str) -> list[str]:
    if verb.endswith(("s", "x", "z", "ch", "sh")):
        third = verb + "es"
    elif verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        third = verb[:-1] + "ies"
    elif verb.endswith("o"):
        third = verb + "es"
    else:
        third = verb + "s"
    if verb in DOUBLING:
        stem = verb + verb[-1]
        gerund, past = stem + "ing", stem + "ed"
    elif verb.endswith("ie"):
        gerund, past = verb[:-2] + "ying", verb + "d"
    elif verb.endswith("e") and not verb.endswith("ee"):
        gerund, past = verb[:-1] + "ing", verb + "d"
    elif verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        gerund, past = verb + "ing", verb[:-1] + "ied"
    else:
        gerund, past = verb + "ing", verb + "ed"
    return [verb, third, gerund, past]


def build() -> dict[str, str]:
    lexicon: dict[str, str] = {}
    collisions = 0

    def put(word: str, tag: str) -> None:
        nonlocal collisions
        if word in lexicon:
            collisions += 1
            return
        lexicon[word] = tag

    for w in PRONOUNS:
        put(w, "PRP")
    for w in FUNCTION_WORDS:
        put(w, "OtherTag")
    for w in IRREGULAR_VERBS:
        put(w, "VB")
    for v in REGULAR_VERBS:
        for form in _verb_forms(v):
            put(form, "VB")
    for w in ADJECTIVES:
        put(w, "JJ")
    for w in IRREGULAR_ADVERBS:
        put(w, "RB")
    for n in NOUNS:
        put(n, "NN")
        plural = _plural(n)
        if plural:
            put(plural, "NN")
    print(f"lexicon entries: {len(lexicon)} (skipped {collisions} duplicate forms)")
    return lexicon


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    lexicon = build()
    with open(OUT_DIR / "lexicon.tsv", "w", encoding="utf-8") as fh:
        for word in sorted(lexicon):
            fh.write(f"{word}\t{lexicon[word]}\n")
    with open(OUT_DIR / "stopwords.txt", "w", encoding="utf-8") as fh:
        for word in sorted(set(STOPWORDS)):
            fh.write(word + "\n")
    print(f"stopwords: {len(set(STOPWORDS))}")
    print(f"wrote {OUT_DIR}")


if __name__ == "__main__":
    main()
