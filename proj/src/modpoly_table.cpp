// Embedded copy of data/modpoly.txt (classical modular polynomials).
// Regenerate by replacing this literal with the data file contents.

namespace isog {

const char* embedded_modpoly_table() {
    return R"MODPOLY(
# Classical modular polynomials Phi_l, canonical symmetric form.
# Format: l i j c  meaning the term c*X^i*Y^j (and c*X^j*Y^i when i != j).
2 3 0 1
2 2 2 -1
2 2 1 1488
2 2 0 -162000
2 1 1 40773375
2 1 0 8748000000
2 0 0 -157464000000000
3 4 0 1
3 3 3 -1
3 3 2 2232
3 3 1 -1069956
3 3 0 36864000
3 2 2 2587918086
3 2 1 8900222976000
3 2 0 452984832000000
3 1 1 -770845966336000000
3 1 0 1855425871872000000000
5 6 0 1
5 5 5 -1
5 5 4 3720
5 5 3 -4550940
5 5 2 2028551200
5 5 1 -246683410950
5 5 0 1963211489280
5 4 4 1665999364600
5 4 3 107878928185336800
5 4 2 383083609779811215375
5 4 1 128541798906828816384000
5 4 0 1284733132841424456253440
5 3 3 -441206965512914835246100
5 3 2 26898488858380731577417728000
5 3 1 -192457934618928299655108231168000
5 3 0 280244777828439527804321565297868800
5 2 2 5110941777552418083110765199360000
5 2 1 36554736583949629295706472332656640000
5 2 0 6692500042627997708487149415015068467200
5 1 1 -264073457076620596259715790247978782949376
5 1 0 53274330803424425450420160273356509151232000
5 0 0 141359947154721358697753474691071362751004672000
7 8 0 1
7 7 7 -1
7 7 6 5208
7 7 5 -10246068
7 7 4 9437674400
7 7 3 -4079701128594
7 7 2 720168419610864
7 7 1 -34993297342013192
7 7 0 104545516658688000
7 6 6 312598931380281
7 6 5 177089350028475373552
7 6 4 4460942463213898353207432
7 6 3 16125487429368412743622133040
7 6 2 10685207605419433304631062899228
7 6 1 1038063543615451121419229773824000
7 6 0 3643255017844740441130401792000000
7 5 5 -18300817137706889881369818348
7 5 4 14066810691825882583305340438456800
7 5 3 -901645312135695263877115693740562092344
7 5 2 11269804827778129625111322263056523132928000
7 5 1 -40689839325168186578698294668599003971584000000
7 5 0 42320664241971721884753245384947305283584000000000
7 4 4 88037255060655710247136461896264828390470
7 4 3 17972351380696034759035751584170427941396480000
7 4 2 308718989330868920558541707287296140145328128000000
7 4 1 553293497305121712634517214392820316998991872000000000
7 4 0 41375720005635744770247248526572116368162816000000000000
7 3 3 -5397554444336630396660447092290576395211374592000000
7 3 2 72269669689202948469186346100000679630099972096000000000
7 3 1 -129686683986501811181602978946723823397619367936000000000000
7 3 0 13483958224762213714698012883865296529472356352000000000000000
7 2 2 -46666007311089950798495647194817495401448341504000000000000
7 2 1 -838538082798149465723818021032241603179964268544000000000000000
7 2 0 1464765079488386840337633731737402825128271675392000000000000000000
7 1 1 1221349308261453750252370983314569119494710493184000000000000000000
11 12 0 1
11 11 11 -1
11 11 10 8184
11 11 9 -28278756
11 11 8 53686822816
11 11 7 -61058988656490
11 11 6 42570393135641712
11 11 5 -17899526272883039048
11 11 4 4297837238774928467520
11 11 3 -529134841844639613861795
11 11 2 27209811658056645815522600
11 11 1 -374642006356701393515817612
11 11 0 296470902355240575283200000
11 10 10 1608331026427734378
11 10 9 30134971854812981978547264
11 10 8 12407796387712093514736413264496
11 10 7 645470833566425875717489618904152240
11 10 6 7848482999227584325448694633580010490867
11 10 5 28890545335855949285086003898461917345026160
11 10 4 35372414460361796790312007060191890803134127320
11 10 3 14131378888778142661582693947549844785863493325800
11 10 2 1587728122949690904187089204116332301200302760915266
11 10 1 33446467926379842030532687838341039552110187929600000
11 10 0 29298331981110197366602526090413106879319244800000000
11 9 9 -573388748843683532691009051194955437
11 9 8 24228593349948582884094197811518266845689352
11 9 7 -51135193038502008150804190472844550800569441050500
11 9 6 14690460927260804690751501000083244161647396386205851440
11 9 5 -994774826102691960922410649494629085486856242714439003812180
11 9 4 22148485195925584385790489089697473918894904664093860668378292000
11 9 3 -199188452917764242987050083089364860927274115441197382331866126825820
11 9 2 804436418307995738740132598166893365099468842089705900525050627891200000
11 9 1 -1458178254597295207839980786768623018650234306932331393013634952069120000000
11 9 0 965122546660349298406724063940884252743873633176129290337528305418240000000000
11 8 8 29211180544704743418963619709378403797452606969172658
11 8 7 636861023141767565580039581191818069063579259290464688398880
11 8 6 987807801334019988631500819088661487281712947788833523552559299560
11 8 5 208334210762751500564946204497082337222910461284651050215872586641463200
11 8 4 8498500708725193890718329655230574962816784139443636591086906768989729050095
11 8 3 79513247125057906492841989395207442300133781750924860449090230806481243648000000
11 8 2 171790435018380416903247878610824648919543398246401012395341432490921925017600000000
11 8 1 66806304467998310581793391194791115184805127528413091235284315294143736709120000000000
11 8 0 1338586400912357073420399795635643400599836918986297982928179335149920452608000000000000
11 7 7 -64999046469909490143435875140651300541119093852394968074094803537810
11 7 6 247900233561939294388612799857476424364856251769094880288086537904279396400
11 7 5 -75948585201267973403627533631138995089882647284307484579413691458563029509971992
11 7 4 2973119672716212219456471881112888569835575578534065127175856819648732682854604800000
11 7 3 -22093249696627933419655226823604057638897222562682635800269909178325710985117040640000000
11 7 2 44681231489418997440503069818655052635806384532381152777755381649015689662976491520000000000
11 7 1 -24155957253764418975307742823129586187061243620756339515602571075061236992294518784000000000000
11 7 0 618840723107761889896363016885251574078635388443306832549992828319945330157158400000000000000000
11 6 6 1168150167526575837857761510359647773943258089269992605255478096499695783789300124
11 6 5 224080399886627495149771654692369177094059649940825305182078225594292057242702643200000
11 6 4 1938738373821740121470446368665797412833082873875468530371642913339302678999680942080000000
11 6 3 -7211912299746007510535159486199919697482960389278446632552985263875183091897870581760000000000
11 6 2 30494044246550310117871895628421273379173050630568397072391110688366558535804457582592000000000000
11 6 1 -95333447356443287210404497374050404132491763274506548619337189691919811046970438451200000000000000000
11 6 0 95356266594731795079493309965756674711058734831164489212811553129058773080352804044800000000000000000000
11 5 5 -15057297311708922526580514410563848478334693758624999774108600968667487260827388477440000000
11 5 4 -177994641867075262695184980920462608604060357466681128822395417442867019643767352197120000000000
11 5 3 -1328993907465108152135763886999825071444084099881098607565574716140191426369978927939584000000000000
11 5 2 9718148718139346647384449201643833517488848029697396574289278515913329360524510494720000000000000000000
11 5 1 -7840379248214196729643062796493269425081859930100141304047932909346022483171510017064960000000000000000000
11 5 0 -3111357148902865912417988391836350251682805385917571877568422664218078901010004935966720000000000000000000000
11 4 4 15043423165563966645618284609730360176005265392518745580151910727157028699006028388237312000000000000
11 4 3 -51038778870467375317174627414281203016789153392265449880353463871004348816411677478092800000000000000000
11 4 2 378494977797549959360178068152933818044335078157093771639955480261351930169113765048483840000000000000000000
11 4 1 59659609577030961637541110289112021078091104767187787822549078869394205439302452893450240000000000000000000000
11 4 0 43714682637171236021367604966833305309923746974850894665325331604362303109715777067941888000000000000000000000000
11 3 3 -925461466455522523607980072366478440235575959511945288268604770825451300845059605937520640000000000000000000
11 3 2 1038677201789914991362090465961377302769147065985487222285672689158918175716097236444119040000000000000000000000
11 3 1 493751729222149651035457063068642305508233453469401395944974296438196687728770695603159040000000000000000000000000
11 3 0 -337500037290942764495395868386562971754016116785390841072048221617443316658082155384012800000000000000000000000000000
11 2 2 -301851634381591833346238394387907563828793379391119445614595161272769455527698270716428288000000000000000000000000
11 2 1 -4175190947377089941611452135383204997172948465221368432119554418845446929655566146994176000000000000000000000000000000
11 2 0 1509199706449264373105244249368970977209959173066491449939153900434037998316228131684352000000000000000000000000000000000
11 1 1 6950986496704390042399105433049126860396103535300642728895074819467726754375236055025582080000000000000000000000000000000
11 1 0 -3708476896661234261166595138586620846782660237574536888784393380944856551532392652692520960000000000000000000000000000000000
11 0 0 3924233450945276549086964624087200490995247233706746270899364206426701740619416867392454656000000000000000000000000000000000000
13 14 0 1
13 13 13 -1
13 13 12 9672
13 13 11 -40616316
13 13 10 97116140576
13 13 9 -145742356534710
13 13 8 142727120530755696
13 13 7 -91944131414745883208
13 13 6 38373375189621696878784
13 13 5 -9980376107988974265288009
13 13 4 1508484527780717514871680200
13 13 3 -117589277940072151921466095740
13 13 2 3813066975450671721121304807712
13 13 1 -32685702714621175092948209889806
13 13 0 15787756016985099663979167744000
13 12 12 63336131453282305176
13 12 11 5339704017492387472276862944
13 12 10 7038227861570702862399825051262104
13 12 9 1017131468961830048705766611220442641072
13 12 8 32988905472599070890328795217808043240900816
13 12 7 333551826778342195432371586876023049547129080896
13 12 6 1234257162452453722866237618078783279952599399679176
13 12 5 1787206767475651398304042906319887696372425891847417480
13 12 4 1010922460622081033367079280521141037085193349093095277208
13 12 3 207577177886168263601723424708043354620195244558620874018272
13 12 2 12893770087100209197778927627416397147602669299324665034127451
13 12 1 157870586217596053304332218736965888119051656824626442141696000
13 12 0 83084413350616406183495875982586495825900375128760385536000000
13 11 11 -936062849021824119784660671862200161988
13 11 10 214191411057420328765018422101187988893741675744
13 11 9 -1967575998834670421411906070499119710120923910594022072
13 11 8 2117324199178304244393290847066787694415213468957410146838208
13 11 7 -481806591005250661668209263946913789583739163176277250633369496316
13 11 6 33157532644992168541479115114277423707920632043639237944990254217082784
13 11 5 -874174690463455858478740034973677797874649720724911207202908349653368101836
13 11 4 10335702376336052876569385632176208762756384874046214470799722804104208232161120
13 11 3 -60259084880308652560754125957376955923094701831235097378932424092592846288059835756
13 11 2 179312619437995268862785568892538140587316635932472934686318597956817819648897662976000
13 11 1 -260241334661897724169148477062778090370575619826743149104887568856318553170833833984000000
13 11 0 145746271865985701303006968690727073623110154189151557978520314340489760352149438464000000000
13 10 10 2303156526339236416244981158503557124969923397655602595936
13 10 9 333376714930461597630366410672145363642373801348744230962709165120
13 10 8 2965269806029300518982153645576999878343315273199400249881587616072766840
13 10 7 3319074015126775003340627498451966608621776985617068464040481273875824853713440
13 10 6 707602306954335961264387747392830714609124951294341249227988393380722334150416923424
13 10 5 36877562398966114743254895852508154513817343754571889820596205093997469123113726984508320
13 10 4 539434066952838633601058314080351829728768185613881497302494155281483862817525900116623514601
13 10 3 2308916580373705363546321120346521865137649088713708960950564814885950596793631208268755124224000
13 10 2 2678665736689769049900018109140598264035750069305308244518131035743577819824227828206936260608000000
13 10 1 618365025729687208026621844082518672586866478732183940869747889968364543178129991952544825344000000000
13 10 0 7605348735017212625875837184978457615081634815943367015020891775626681233374752203029348352000000000000
13 9 9 -344642844610887365333843812260789022299828714507153260278660403308943561718
13 9 8 11510485988607799847944664306226745280653016997751179971212105953518910829665118960
13 9 7 -28971833722004769608218351898602997023873718918496584569542741468721604925350565276800952
13 9 6 8968707059877929793953816639999625053085656781146444057912686388706404082753228694260847129920
13 9 5 -474980656775733704222417133934306465523573652393831168608700490473956434788522583600537536840594898
13 9 4 5716677920985743655201500120101677007190102608912515081206876829642793929337037298192242022307430400000
13 9 3 -20678078537212882761694153848026684161510425619867392882628417971589808513139875419201055859633291264000000
13 9 2 25872463908449289016750628555567372710185328848483463083494077182570444339188517407317465229936295936000000000
13 9 1 -8674072694766581259832161984558424258242345509461562068916284333261672299485935075259027823494430720000000000000
13 9 0 132287948592242819730686388197721726586421046648941198415164132202495387061267918873489002706501632000000000000000
13 8 8 763629377534280239525001752797018342037897631130969295340196615666330614048031692849601680
13 8 7 2155218753344782821853617766133779473725138989326106677408530224250256987904613455196577522696384
13 8 6 415431723402642702720731130934926941857797474097020970018619513668017459051573659373309870938643397563
13 8 5 5757558921048446015266554919402344737333501100152974630225108131920384126722107536788649181513676013568000
13 8 4 -6095414391440954795178869663499425828291538452766653566256327921063584062137305104052711687223009869824000000
13 8 3 -62333021735677560171642749900635564915892941745383692317263013992372210489562891779314959788281383878656000000000
13 8 2 367699880302507769522184906338576349930282889799687609612600740135262931410546189503475085055061919793152000000000000
13 8 1 -913844005726821508929480521086904504761295550807304466343649705885472617699094229816628221421776732684288000000000000000
13 8 0 767013621315952423931475176267170123577142608595930709148835175130350223089832292329376203694232005771264000000000000000000
13 7 7 -3539294606963747267479265746594748156709881306171284362655032102198235369837795589356541679185977279848
13 7 6 187433051934148497537178792064160144226449743146562769523813325806108271927829978476604969216803944169472000
13 7 5 -3702665127143760979998154278812085426166716114551745045128607584536820099329002243268464660519705479479296000000
13 7 4 -18313220589707554303919628836565371160582541687979396960418053123247399413186658869150749995799620001726464000000000
13 7 3 303628396849623247388501617704769126069627806954925724909207701265590212162332663163323999037945093480775680000000000000
13 7 2 -226668496996199203777352229716417461096995804909768763297196647245168959821482189931394270493086737753964544000000000000000
13 7 1 -465337020884877935874185748520218965445631193822519111113045800260798180133962179115662432186399226106740736000000000000000000
13 7 0 66829334150181693395733549605487911633242059793148257435222656254771339933627547003847032182942337299644416000000000000000000000
13 6 6 21919503989502556482532977985659185423685666886088290313930781118854798926106308297736210617657464845238272000000
13 6 5 -1410473999113376096921325206927033932443299808279922080543730137710923836158828899053966820213587545583255552000000000
13 6 4 17722361050304472620163034691211680403065699682566045788144444570455590725483253301914282961928612252886237184000000000000
13 6 3 -17733806301048501011486217516580565338695560468655559232106708808776991496975958558628543386809658957681917952000000000000000
13 6 2 175801761541721296614163144760797961999581545737966242399898402245904424096892942484369837626392492960431210496000000000000000000
13 6 1 34208636313948962505255416382800378890590483698550917680568729071142350960549152337412536609529405160000847872000000000000000000000
13 6 0 3268240030696916778423724456839641770009309037438345492166218927315814548015978322807870290034191070539022336000000000000000000000000
13 5 5 5627576194161215810088198676115700033241050131121473877965970475637724125302025889733550246015725064794669056000000000000
13 5 4 828973674649555922651050874150305990627094598448649047796953362599591050742151260055665892525003926982843432960000000000000000
13 5 3 -941802378462465511244447050809161114536892868345640328360842000821724559505492381497133977607854427475915309056000000000000000000
13 5 2 -5648591949659254685659692003344338379638954758557151198844390691020983772484333009507611037427149946420681768960000000000000000000000
13 5 1 1617796325733693961426612991967106010346218233891170279500742895526209242404102299051177796077528512644260036608000000000000000000000000
13 5 0 95888722830042559821615002218841595211920062873311035820055532712656384110985948315484610123352758708871364608000000000000000000000000000
13 4 4 4081674117329728804489206772464831122415122070151308117835102044725072517715001683094459791402673386965744746496000000000000000000
13 4 3 -24885848452127894014624454936412695642180132782686131038890849143846266810389567025962091921161996214123131568128000000000000000000000
13 4 2 58405353917014162404952148388731205467622015248477898593099624781969985828433123084038663979821981572463218130944000000000000000000000000
13 4 1 -4772454395099970588376889812892387899584728241524331459452038527296029061412099051047499510623295031345026170880000000000000000000000000000
13 4 0 1885223597142817735215521923030446116923320678716240056759672332116990135924145606946025364033903751052868452352000000000000000000000000000000
13 3 3 -4983534780898623837208148120899538170442693994917976285662769716226848993219053110271292940660067899070381817856000000000000000000000000
13 3 2 60459932962707148685750780439295720777105469153376987257360608129644675668266607620124314344109550426506206904320000000000000000000000000000
13 3 1 -185232507560749354757488264428490031076630581809117895374513401195331750782161966573976898709883093065359517810688000000000000000000000000000000
13 3 0 22236398027215399937779019690353966999876882002081199329677306063131993047041542443852802352851578390365960404992000000000000000000000000000000000
13 2 2 26281453854686565480854489645262487309390226496990889730097271768767754182467308700379350639320763133343165317120000000000000000000000000000000
13 2 1 -37066027755072565194081927511328660876696510055655033788696425898925604370808677258232777955584843608603884519424000000000000000000000000000000000
13 2 0 147213371414156573713539483874043827500390696883068187579053600467101994104225901089258359895920442702174699388928000000000000000000000000000000000000
13 1 1 -33905309938808933226695939390198532869912468194279700917160273935527359588865865248595689625551089671051614879744000000000000000000000000000000000000
)MODPOLY";
}

}  // namespace isog
