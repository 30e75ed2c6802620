"""Frozen 50-digit reference values; regenerate with tests/oracles/generate.py."""

ERF_TABLE = [
    (0.0, "0.0"),
    (0.3, "0.32862675945912742763891404786675655116991809626268"),
    (0.6, "0.6038560908479259225626224360567232065642733648001"),
    (0.9, "0.7969082124228321285187247851418859375486580415858"),
    (1.2, "0.91031397822963538023840577571537367722789705596903"),
    (1.5, "0.96610514647531072706697626164594785868141047925764"),
    (1.8, "0.98909050163573071418373281075584922707655466021101"),
    (2.1, "0.99702053334366701449611498335897648133006802708836"),
    (2.4, "0.99931148610335492143025506782936831973766394506082"),
    (2.7, "0.9998656672600594756708598812798199104621778147446"),
    (3.0, "0.9999779095030014145586272238704176796201522929126"),
    (3.3, "0.99999694229020356183853819659731291795151775368265"),
    (3.6, "0.9999996441370069923147011844435800829426042867275"),
    (3.9, "0.99999996520775140276825772169236483848633444519505"),
    (4.2, "0.99999999714450582040781138425078077182384098187136"),
    (4.5, "0.99999999980338395584571125237208396323356673394223"),
    (4.8, "0.99999999998864785641507803904511455470587775716865"),
    (5.1, "0.99999999999945061797824447004029934770425387384159"),
    (5.4, "0.99999999999997772321320532205214228548633133408498"),
    (5.7, "0.99999999999999924337883781374986374528958535578979"),
    (6.0, "0.99999999999999997848026328750108688340664960081262"),
]

EXP_MINUS_ONE = "0.36787944117144232159552377016146086744581113103177"
ERF_ONE = "0.8427007929497148693412206350826092592960669979663"
ONE_MINUS_ERF_SIX = "2.1519736712498913116593350399187384630477514061689e-17"
CAPITAL_PHI_ONE = "0.74682413281242702539946743613185300535449968681261"
DENOMINATOR_1_1 = "1.4936482656248540507989348722637060107089993736252"

F_VALUES = {
    (1.0, 1.4): "-0.14271186638798201312463421753160618700065263336639",
    (0.001, 0.5): "0.49999981250002812500024330895177822893905966339845",
    (0.001, 1.0): "0.0",
    (0.001, 2.0): "-0.99999850000090000003207996360148505553393281223263",
    (0.5, 3.0): "-1.0222651979473286434934630368916865760356818490586",
    (2.0, 0.25): "0.28305286264592419082325813331800958619316938379353",
}

H_VALUES = {
    (1.0, 1.4): "0.78147705409692529056487977890541798188569314148981",
    (0.5, 3.0): "1.1440247419920400875870541661642838817839259506772",
    (0.5, 0.25): "-0.015845040650035922868641406098194154268411608836289",
    (0.7, 2.0): "1.0465179930659657297925983332563519587419130483752",
    (1.0, 0.5): "-0.38918115725801957307340086916598680089375381516064",
    (3.0, 4.0): "0.0041560252529708563730365478191832410631795239029099",
    (0.1, 0.8): "-0.0000069293324588492204310063123176001020418071152530013",
}

H_DOUBLE_VALUES = {
    (1.0, 1.4): "0.78147705409692529056487977890537423452001525254694",
    (0.5, 0.25): "-0.015845040650035922868641406098195454973168960537913",
}

MOMENTS = {
    (0, -1.0, 1.4): "1.5907648466540907173389732798933734489808574388082",
    (3, 0.0, 1.0): "0.13212055882855767840447622983853913255418886896823",
    (2, 4.0, 5.0): "0.00000023186654284366120978728183178568985930923120244413",
    (5, -4.5, -3.0): "-0.0062318318733664547804538321587938250236231687671962",
    (4, -0.01, 0.02): "0.00000000065981574278261007150589164473868445141354697734869",
    (1, 2.0, 2.0000001): "0.0000000036631271307045405753819781537970196057396882609297",
}

LEGENDRE_RULES = {
    10: (
        ["-0.97390652851717172007796401208445205342826994669239", "-0.86506336668898451073209668842349304852754301496533", "-0.67940956829902440623432736511487357576929471183481", "-0.43339539412924719079926594316578416220007183765624", "-0.14887433898163121088482600112971998461756485942069", "0.14887433898163121088482600112971998461756485942069", "0.43339539412924719079926594316578416220007183765625", "0.67940956829902440623432736511487357576929471183481", "0.86506336668898451073209668842349304852754301496533", "0.97390652851717172007796401208445205342826994669238"],
        ["0.066671344308688137593568809893331792857864834320156", "0.14945134915058059314577633965769733240255663966942", "0.21908636251598204399553493422816319245877187052268", "0.26926671930999635509122692156946935285975993846088", "0.29552422471475287017389299465133832942104671702686", "0.29552422471475287017389299465133832942104671702686", "0.26926671930999635509122692156946935285975993846089", "0.21908636251598204399553493422816319245877187052267", "0.14945134915058059314577633965769733240255663966943", "0.066671344308688137593568809893331792857864834320155"],
    ),
    20: (
        ["-0.99312859918509492478612238847132027822264713090166", "-0.96397192727791379126766613119727722191206032780619", "-0.91223442825132590586775244120329811304918479742369", "-0.83911697182221882339452906170152068532962936506564", "-0.74633190646015079261430507035564159031073067956917", "-0.63605368072651502545283669622628593674338911679937", "-0.51086700195082709800436405095525099842549132920243", "-0.37370608871541956067254817702492723739574632170568", "-0.22778585114164507808049619536857462474308893768292", "-0.076526521133497333754640409398838211004796266813497", "0.076526521133497333754640409398838211004796266813494", "0.22778585114164507808049619536857462474308893768293", "0.37370608871541956067254817702492723739574632170569", "0.51086700195082709800436405095525099842549132920243", "0.63605368072651502545283669622628593674338911679937", "0.74633190646015079261430507035564159031073067956918", "0.83911697182221882339452906170152068532962936506564", "0.91223442825132590586775244120329811304918479742369", "0.96397192727791379126766613119727722191206032780619", "0.99312859918509492478612238847132027822264713090165"],
        ["0.017614007139152118311861962351852816362143105543346", "0.040601429800386941331039952274932109879090639989946", "0.062672048334109063569506535187041606351601076578446", "0.083276741576704748724758143222046206100177828583157", "0.1019301198172404350367501354803498761666916560234", "0.11819453196151841731237737771138228700504121954897", "0.13168863844917662689849449974816313491611051114699", "0.14209610931838205132929832506716493303451541339201", "0.14917298647260374678782873700196943669267990408138", "0.15275338713072585069808433195509759349194864511238", "0.15275338713072585069808433195509759349194864511238", "0.14917298647260374678782873700196943669267990408137", "0.14209610931838205132929832506716493303451541339202", "0.13168863844917662689849449974816313491611051114698", "0.11819453196151841731237737771138228700504121954896", "0.10193011981724043503675013548034987616669165602339", "0.08327674157670474872475814322204620610017782858316", "0.062672048334109063569506535187041606351601076578434", "0.040601429800386941331039952274932109879090639989944", "0.017614007139152118311861962351852816362143105543343"],
    ),
}
