var timerDelay = 400;
var score = 0;
var highscore = null;
var currentMode = 'E';
var trailno = 6;
var textList = null;
var BasicGame = new Array(timerDelay, score, highscore, currentMode, trailno, textList);

function updateScore(points) {
    BasicGame[1] = BasicGame[1] + points;
    return BasicGame[1];
}

function nextMode() {
    if (BasicGame[3] === 'E') {
        return BasicGame[0];
    }
    return BasicGame[4];
}
