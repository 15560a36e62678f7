// Generated by gen_frozen.py (sympy). Do not edit.

pub struct IntCase {
    pub rows: &'static [&'static [i64]],
    pub coeffs: &'static [&'static str],
    pub det: &'static str,
    pub adjugate: &'static [&'static [&'static str]],
}

pub const INT_CASES: &[IntCase] = &[
    IntCase {
        rows: &[&[4, 0, -1], &[-3, 0, 0], &[0, -5, -2]],
        coeffs: &["15", "-8", "-2", "1"],
        det: "-15",
        adjugate: &[&["0", "5", "0"], &["-6", "-8", "3"], &["15", "20", "0"]],
    },
    IntCase {
        rows: &[
            &[-1, 9, -7, -9, 3],
            &[1, -1, 9, -8, -5],
            &[-7, -10, -4, 0, -10],
            &[-3, -1, -1, 3, 2],
            &[-4, 4, 9, 1, 3],
        ],
        coeffs: &["-33075", "-22018", "297", "99", "0", "1"],
        det: "33075",
        adjugate: &[
            &["-1380", "-60", "-1755", "-3570", "-2190"],
            &["961", "-5998", "2061", "-15106", "5983"],
            &["-990", "1395", "-540", "315", "1305"],
            &["-1657", "-5249", "1368", "-9128", "3554"],
            &["401", "5482", "-3924", "17479", "-4972"],
        ],
    },
    IntCase {
        rows: &[
            &[-3, -9, 8, -2, 1, -2, 2, -3],
            &[-4, 7, -6, 3, -9, 2, -10, 0],
            &[6, 2, 1, -7, 3, 4, 0, -9],
            &[-7, 8, 9, -5, -9, -1, 0, -4],
            &[6, -10, 0, 7, -10, -3, -3, 1],
            &[1, 6, 3, -9, 7, -6, -8, -2],
            &[-2, -10, 9, 4, -2, 9, 9, -6],
            &[-8, -3, 0, 1, 4, 4, 2, -9],
        ],
        coeffs: &[
            "-172676755",
            "-65644178",
            "-12808789",
            "-1128161",
            "-65003",
            "-5334",
            "-187",
            "16",
            "1",
        ],
        det: "-172676755",
        adjugate: &[
            &[
                "15577164", "7165627", "-3542736", "133768", "-9063587", "-7843851", "-6194797",
                "3156773",
            ],
            &[
                "28442817",
                "9380476",
                "7397262",
                "-8484186",
                "-5356691",
                "-12308923",
                "-7263611",
                "-6124916",
            ],
            &[
                "15133075",
                "3989930",
                "11482380",
                "-3797860",
                "-5002210",
                "-21446475",
                "-20307110",
                "2909355",
            ],
            &[
                "44352025",
                "14635615",
                "21103525",
                "-4264470",
                "-19839730",
                "-25750505",
                "-19163810",
                "-17698420",
            ],
            &[
                "12771290",
                "5405840",
                "8398505",
                "5557940",
                "75745",
                "-15286100",
                "-9144105",
                "-5624400",
            ],
            &[
                "-12453624",
                "-18695322",
                "-6589674",
                "10505497",
                "15630592",
                "4105251",
                "-12535388",
                "15253152",
            ],
            &[
                "3919983", "14360164", "-2839782", "-7894109", "-16894", "14242568", "9551131",
                "-4492699",
            ],
            &[
                "-17387012",
                "-10585381",
                "3201043",
                "7620386",
                "14614511",
                "6409868",
                "-1714479",
                "19736501",
            ],
        ],
    },
    IntCase {
        rows: &[
            &[-8, -1, -3, -5, 5, 9, 3, -5, -5, -1, 9, -9],
            &[7, -9, 4, 0, -8, 2, 1, 3, -7, -1, -10, 1],
            &[-4, -5, -4, 0, -6, 3, 9, -8, 1, 9, 0, 3],
            &[-2, -8, 9, -9, 3, 8, 5, 7, 10, -1, -1, -3],
            &[3, 7, -5, -8, -1, -1, 6, -3, -5, 3, 2, 1],
            &[-4, 3, 4, -10, -3, -10, -7, 1, 8, -6, 0, 9],
            &[1, -3, 6, 4, 3, 6, -10, 9, -9, 9, 7, -7],
            &[4, -5, 9, -10, -9, 6, -2, -9, 3, 10, -1, -4],
            &[-10, 4, -1, -5, -5, -2, 2, -9, 10, -5, 9, -7],
            &[-10, 0, -6, -1, -7, 7, 0, 5, 1, 1, -2, 1],
            &[-4, -6, 2, 8, 1, -5, 9, -2, -10, 5, 0, 2],
            &[-8, -3, 10, 2, 3, -2, -1, -1, -5, 4, 7, 5],
        ],
        coeffs: &[
            "46785382084646",
            "14644029511421",
            "2004154001803",
            "63795978940",
            "-3867162870",
            "-112810900",
            "-12440742",
            "-1926268",
            "-105016",
            "6252",
            "891",
            "44",
            "1",
        ],
        det: "46785382084646",
        adjugate: &[
            &[
                "-1125629157663",
                "2575673247385",
                "3014485175095",
                "223757221169",
                "1382670081017",
                "-933784955632",
                "1360985649806",
                "-2327942234071",
                "995656884458",
                "-3359392111772",
                "-3831957041409",
                "830181997939",
            ],
            &[
                "-2398228678857",
                "-2180458104285",
                "-4860255708749",
                "-452694943847",
                "2407667667625",
                "-3299043049662",
                "-2353568538210",
                "2141101643413",
                "250068473056",
                "2910470322796",
                "52600150717",
                "2385407512391",
            ],
            &[
                "-1803847906613",
                "-2782548947",
                "-3553644332135",
                "675702993429",
                "713454406301",
                "-2439760732228",
                "-1702724602108",
                "1795943249031",
                "767226287584",
                "898224068420",
                "125242115367",
                "3437432409035",
            ],
            &[
                "-1916547342895",
                "310101491103",
                "162906285997",
                "-658302107979",
                "-1078405044777",
                "-2767061910206",
                "-424228988280",
                "-897001799741",
                "1123476084414",
                "22573258630",
                "-1326453458703",
                "1979273122059",
            ],
            &[
                "2197123515440",
                "-3448117076502",
                "-1530318587208",
                "406080608158",
                "-1591392273726",
                "1026167755442",
                "-1239743728820",
                "1445667111940",
                "-3258459180576",
                "-366938456702",
                "2292707772824",
                "-1707184046130",
            ],
            &[
                "66148921783",
                "1248793307101",
                "479365091889",
                "28322489297",
                "308422618213",
                "-3215800652022",
                "-1518225766612",
                "-491511923273",
                "-440669537514",
                "849460456550",
                "-4630674002817",
                "3872155031653",
            ],
            &[
                "-1557330767708",
                "784837211524",
                "129057397316",
                "1655268186758",
                "2370266903616",
                "-2011786075096",
                "-685390929204",
                "-1172324739564",
                "1488833059974",
                "-175447233304",
                "221183475548",
                "1236300451804",
            ],
            &[
                "-1593368991148",
                "703447324424",
                "347026018818",
                "1635695354354",
                "1586522935610",
                "397977456222",
                "2217433547106",
                "-1926516246464",
                "902384162928",
                "599811320310",
                "212291640098",
                "-647563179176",
            ],
            &[
                "-1367889152278",
                "-1221310935222",
                "1448398313838",
                "1017689135870",
                "-1059194340596",
                "-134133736880",
                "170082449578",
                "-287015629074",
                "601677239138",
                "-591480042562",
                "-905672403930",
                "-691668168306",
            ],
            &[
                "-724049811451",
                "-3407335191879",
                "-61605221213",
                "190624568755",
                "19570082617",
                "883885871432",
                "1071576482168",
                "2391096719705",
                "-1577247058128",
                "1091468018996",
                "3066414190139",
                "-2305314043791",
            ],
            &[
                "-751739006028",
                "3759339128788",
                "5839941842396",
                "411284659968",
                "1946679520186",
                "-224654170246",
                "3384274982342",
                "-5071996278548",
                "3369779692994",
                "-3777529021910",
                "-5490111259708",
                "3002479087238",
            ],
            &[
                "-523798296191",
                "1801853748607",
                "3476066788535",
                "-286426260147",
                "730686579927",
                "-238644763800",
                "-641622540916",
                "-2456003815181",
                "-837916456598",
                "-965516378492",
                "-4633321257219",
                "4090070293631",
            ],
        ],
    },
    IntCase {
        rows: &[
            &[
                18, 48, -9, -18, 41, 63, 79, 56, -21, -98, 65, 45, -70, -82, -100, -57,
            ],
            &[
                -99, 77, 40, 7, 74, -98, -23, 3, 57, -55, 36, -31, 80, -24, -77, -58,
            ],
            &[
                -93, 77, -69, 15, -88, -81, -10, -66, -41, 88, 53, 21, -19, 87, 52, -64,
            ],
            &[
                65, -81, 26, 96, -25, 74, -74, 3, 14, 81, 33, 37, -14, 30, 25, -81,
            ],
            &[
                27, 21, -8, 26, 43, -76, 47, 50, 18, 48, -99, -11, -49, 84, 18, -22,
            ],
            &[
                68, -13, -12, 80, 34, 38, -19, -61, 61, -58, 18, 15, 41, 90, -52, 13,
            ],
            &[
                -11, -2, -57, 82, -40, 22, -66, -56, -25, 76, -98, 71, -48, -61, 85, 33,
            ],
            &[
                -90, 49, 69, 77, 52, 17, -91, 22, 88, 88, -95, 63, -69, 85, 89, 96,
            ],
            &[
                -44, -35, -52, -98, 70, 1, 23, -78, -24, 84, -13, 96, 69, 36, 13, -69,
            ],
            &[
                64, -47, -55, -46, -70, 31, 10, -35, -6, 50, 34, -52, 6, -17, 53, -84,
            ],
            &[
                -54, 41, -19, 63, -67, 38, -71, 62, -13, -36, -66, -46, 14, -5, -69, 30,
            ],
            &[
                -88, 14, 43, -43, 92, 17, 94, -16, -64, -51, -33, 2, -52, -61, 93, -90,
            ],
            &[
                -68, 0, 35, 16, -28, 80, 59, 7, -15, -81, -100, -85, 13, 48, 76, -93,
            ],
            &[
                -1, 92, 37, 42, 77, -94, 86, 28, 94, 11, 61, 92, 95, -92, -20, -100,
            ],
            &[
                6, 3, -96, 93, 90, -95, 26, -100, 12, -44, -87, -20, -37, 45, -90, 66,
            ],
            &[
                -67, -14, -88, 76, -50, 19, -31, 87, -85, 0, -91, 46, -18, -17, 8, 57,
            ],
        ],
        coeffs: &[
            "-67463020339970995496668187594642785",
            "-1442508737293127383353529888317113",
            "-5389096962252169583384787470582",
            "120705508530261803535568794670",
            "-192163585961213916313396275",
            "-3118525001359733052010010",
            "-79796275411454669197511",
            "489262575639358144620",
            "903126306783423081",
            "4996007929496276",
            "-134236031969580",
            "76765452883",
            "3228084640",
            "-3776947",
            "-20979",
            "-9",
            "1",
        ],
        det: "-67463020339970995496668187594642785",
        adjugate: &[
            &[
                "129868881253530384938183482675504",
                "95769642971620698444997485359066",
                "57897655170211793323733106913987",
                "143153337176386880308260251517948",
                "-439425336397159716225976611695027",
                "-520241164932044295272269029233834",
                "-232576588834490424938626327087503",
                "255278013417909861254128197919672",
                "78899952021436673030953641482531",
                "-23271221645027156721674107291720",
                "-304142997324816389123751156209996",
                "-321373821591536921489379052089050",
                "387407162360339212811186232983365",
                "34409180914383025789098983797587",
                "326543582263917953861748532433807",
                "177719639686286076890861346487417",
            ],
            &[
                "244513311067200614643018769351237",
                "431294898352285204337041379057883",
                "-182747084949814453747260308200904",
                "348493660951374841800422214536539",
                "-289943455539122614595955801182771",
                "-693320026010551439646358584591562",
                "58575684782657291208908196216151",
                "9318574526632439112883276037201",
                "22789829835882070895109942634983",
                "-232988513762678104311762192215010",
                "-1168338592379992948866176909837113",
                "-877658739434698705787428904605590",
                "714646614084653587054368264834960",
                "-211718974718654348566187552954874",
                "293186409187351842352870990679271",
                "338484709753652889133511477467366",
            ],
            &[
                "84860121352645018858137415349544",
                "144751703129673072681829353175536",
                "-20852218064037375774360161133878",
                "-242318336321416656188143175379507",
                "3082492901559987920947489912123",
                "335314858095791465673504837983651",
                "-132170792965617038221914266115173",
                "217368118904154071767157116511487",
                "11677609729431949487799484451631",
                "753897845356060499817478722989770",
                "-3032557718618472392090462932016",
                "142328584215891580391077053576820",
                "-225772440773042552437252623255245",
                "797925407627491955401429389552",
                "42392425944814115221624236592657",
                "434949048612017688813633900895677",
            ],
            &[
                "262019575859507857807460998642051",
                "381196904673951527110216029303179",
                "-92190407970172440100811360466657",
                "-241612876970645425823279228115373",
                "191273161313129595800204336937577",
                "-78631819827769737895279339746576",
                "306876521584898468007898673726468",
                "-41056105291866838444351166104757",
                "150114779788643069735127165060059",
                "-31429586918763558988256474206125",
                "-445857723640547495770975047565004",
                "-398333858379306012094100255554165",
                "176725967812389552435644768943750",
                "-315067424203758392466454308897117",
                "-255731580314100699691882295333627",
                "-40895314053308815669742671677777",
            ],
            &[
                "328381503679001084792262088918912",
                "220998995901642295519281934194943",
                "99526179009961653790116249772486",
                "45698061366666391384472865986219",
                "-104661306730113511834659136809126",
                "-544643602452857636969930511343637",
                "424882191942159309027996129107526",
                "-167448021138155632357499961955559",
                "-44761823211786468374404532937667",
                "-484866423735235034865406424883980",
                "-775368106079498812464222714517823",
                "-995503626638480816381204396645775",
                "764955728451074319049446247715470",
                "-128769242593385709042532972102369",
                "-10284811297289135402488353095524",
                "-48600892980468782392466289246889",
            ],
            &[
                "123216781764315755073345004469041",
                "587103625498421950110652532563919",
                "14033025261515036172614237391223",
                "5796163115016574684338416688172",
                "242093212656357440586998441691542",
                "-237904015164907628133123406479546",
                "418492366279457393296151382141818",
                "-245810983137845976232684901737977",
                "-137049936389926124986001382850716",
                "-358065292701966028506131080092570",
                "-878839088870859183275297174135304",
                "-556492963303667595537167847515010",
                "309062026490686452445042663487420",
                "-245780425320503414410777408542197",
                "-95506999093037002707166762008307",
                "137972675101265654467289403363653",
            ],
            &[
                "82002621335510579171036121257491",
                "684348623176870268198839670476809",
                "-76619122103908595138142270356172",
                "-76659186076816572056158492220493",
                "342152001473994050745612032372977",
                "411209433537789195260046441133464",
                "492621570166150014498821411467353",
                "-111505483644861089165635228362107",
                "-41796057079122375881446828614296",
                "72565605917673596651365015462225",
                "-185311562736145003216461405549484",
                "15483213610931794264540688013135",
                "-219994012428386533078780046221730",
                "-440372504394473513779553221865887",
                "-442113658218028055857454938472477",
                "82986221002921268383544677448563",
            ],
            &[
                "-19058740977790180641628393507726",
                "-110150503429231595746762205913219",
                "92162065867217226864840623457752",
                "36290924007740549959312106987363",
                "-188323146698009548889495738468972",
                "-101907755474979946151526377095169",
                "211741968276678423384272049903062",
                "-100068823066264736750810858523738",
                "73668176243917640489423525744446",
                "-245771115615472374664395322161470",
                "22817515172033093314729924754734",
                "-66914289262787330944746219088330",
                "145561199421059886028379566937285",
                "-14591990850878633961900308855093",
                "174389387683473356769358084187817",
                "-360289734827557547506483339311633",
            ],
            &[
                "-471348702592645103726410367415729",
                "-498505237335787242478689183914751",
                "160055604545415822335911910825508",
                "55474578354191761338163729177202",
                "199738747413352178491844055857722",
                "426572386032988187517171285920864",
                "-187882396021242581174230841007897",
                "-358540591618206230545329698136232",
                "22971105470522279996358867994604",
                "-254122343841460507683970335132005",
                "973210640390140407785421108119906",
                "971631632444522418147979045986715",
                "-687958800524592392536927123537595",
                "56949670471047818337468584232133",
                "-177507025987424847801671762872072",
                "-169383045094257745987849492066817",
            ],
            &[
                "373575596052635920196536731027869",
                "778521415330813846297350406116511",
                "-74852181259039773478387705304528",
                "-208389554587804139220963747207222",
                "177564626864671447977214699372948",
                "228460839478683310691432371220806",
                "593415473836827503770794108776292",
                "-199395746704711295443362526742248",
                "-167269350347930955255571029214164",
                "-244706770083281650306179429973890",
                "-1064082296849226791191800304059801",
                "-562771454587457058415529640452730",
                "468964251681697461204291961841260",
                "-428925431445101555131946250017138",
                "-331577938237187444551235477797218",
                "299211048841727876679994340871017",
            ],
            &[
                "115398115316350343728880212667831",
                "167046752749855202586806414940494",
                "-137270304714005384969118123950887",
                "-50783175701088757884842694582113",
                "264400268541328509044386470069282",
                "-172007143527320017914441057839381",
                "442285345386888416962222334332873",
                "-153230634382586696613647485350342",
                "138725226881528871059291439048644",
                "-293993553923257870503401197554100",
                "-141929978947861928876262452665114",
                "-359445662232409599662554826612760",
                "342221964024417569204902561349795",
                "-122977530106817307132840220379442",
                "-58433537496640364801713651214937",
                "-145523407246971543156937742437177",
            ],
            &[
                "-417147051324715433231305871473411",
                "-419701945787708441685160612739959",
                "-6970881275785240248345089863148",
                "8278112351687735082698430701513",
                "-114946783692581677394377455813552",
                "107084700526551730785226659498911",
                "-585589607694598483778317739849493",
                "161538681164858259761311434948327",
                "-110070417255138034259461224575924",
                "575867240360516760033334099060015",
                "943483327552320274068896310268134",
                "749741900667803028463833647723195",
                "-484407381889098239157332687805785",
                "212274815974588938698010845238032",
                "248194869492909041902823952178087",
                "-144787656840240734039417254250063",
            ],
            &[
                "464431608434310567611402770287998",
                "319747560275209120232348617882352",
                "33749100345419927563507006471714",
                "103869607849097532822081592337341",
                "55732218327372917329343458186126",
                "-363378886387083615537363431019763",
                "253821645503461483595093090957349",
                "100505885643561984613598585617084",
                "-113427504656264642368485243029293",
                "-84991666301486078788147672043710",
                "-639049770631414584892764592004532",
                "-449253934970175241627940374303065",
                "304155702396710943062465602886185",
                "-297557009093989680610477095502451",
                "99989550804046574629756227656589",
                "-13666560019519839850823193953891",
            ],
            &[
                "2551792155908652689455522805270",
                "-4150591148605368185342569155335",
                "-129703105659938762160732522331735",
                "17896991525994546075137826084890",
                "-179284510878011849082879030656610",
                "-239797576278350047257393241913520",
                "110388435305542946595300373418445",
                "1252929968192026871804411942315",
                "-51050177031814386929736639952955",
                "117267440870002674296848252456635",
                "75609569350290157036835818297045",
                "31709416907324834598421847291700",
                "-32658574099089745088270875973710",
                "126324806885812053231638732700615",
                "115620943444568310729046168552120",
                "-46645626018069994966544433145490",
            ],
            &[
                "173987850288637733327974867147726",
                "-135064950084411159217790666660846",
                "6050538637642078144322925648278",
                "234812836072099574079451609527757",
                "-112045508275746899560809937925028",
                "-459565035735947007183081415246216",
                "-85515360799050811034900248442337",
                "-72910671083000032856485062583522",
                "190712706069086411904168258207359",
                "-343002501157505871888173956778000",
                "199057544573716779050658698004516",
                "-330161870731842970757788859493800",
                "180792182035955653539101956403820",
                "29738056495449719282672608105523",
                "284459299519581509533108703785648",
                "-272013563191249336676661792922317",
            ],
            &[
                "256023721404263688818919914828642",
                "452890811801613634757087439665523",
                "10464287281303070657750307481436",
                "143130821429706520486849462529809",
                "255601051916723936093880790243424",
                "-25231600034821764169524820829422",
                "329313252885953742989104083578971",
                "-147490448870756760383835154764809",
                "54207690992648423300366003648118",
                "-26908789625726577435886677246625",
                "-321389374462384266147317550414353",
                "-235727749201994885049551086380400",
                "245190578834663125213759466400930",
                "-181671421286519439546632996815084",
                "-153695858753025177361466479955769",
                "-7193438392155777209247266273209",
            ],
        ],
    },
];

pub const RAT_ROWS: &[&[&str]] = &[
    &["-7", "-1/2", "2/3", "-1", "-8/5"],
    &["2/3", "5/4", "-3", "0", "-7/3"],
    &["0", "7", "-3", "1/3", "-3/5"],
    &["-4/3", "1/3", "-2", "1", "-6"],
    &["1/3", "-2", "1", "2", "-3/2"],
];
pub const RAT_COEFFS: &[&str] = &[
    "1191373/1944",
    "1219091/3240",
    "216503/1080",
    "4861/120",
    "37/4",
    "1",
];

pub const MOD101_ROWS: &[&[i64]] = &[
    &[99, 2, 68, 83, 64, 44, 53],
    &[61, 89, 95, 26, 21, 38, 15],
    &[54, 65, 70, 6, 46, 26, 4],
    &[44, 18, 46, 90, 94, 5, 92],
    &[81, 31, 6, 46, 11, 97, 60],
    &[68, 87, 67, 72, 92, 14, 81],
    &[41, 79, 36, 62, 33, 35, 74],
];
pub const MOD101_COEFFS: &[u64] = &[97, 8, 7, 27, 62, 50, 58, 1];

pub const POLY_ROWS: &[&[[i64; 2]]] = &[
    &[[-1, 2], [2, 0], [2, -2], [-2, 2]],
    &[[2, 3], [-5, -1], [0, -3], [-3, -1]],
    &[[-2, 2], [-5, 2], [1, -2], [0, 2]],
    &[[1, 2], [0, 0], [-1, -2], [4, 1]],
];
pub const POLY_COEFFS: &[&[i64]] = &[
    &[-135, 128, -44, 14],
    &[76, 122, -5, -10],
    &[-19, -30, 5],
    &[1],
    &[1],
];
